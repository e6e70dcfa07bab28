#pragma once

#include <string>
#include <vector>

#include "zolo/errors.hpp"

namespace zolo {

// Nonnegative Borel measure on the real line, in one of three shapes:
// uniform density 1 on (a,b), a discrete sum of point masses, or a raw
// moment vector h_m = int x^m dmu (m = 0..h.size()-1).
struct MeasureSpec {
    enum class Kind { uniform_on, discrete, moments };

    Kind kind = Kind::uniform_on;
    double a = -1.0, b = 1.0;          // uniform_on
    std::vector<double> nodes;         // discrete
    std::vector<double> weights;       // discrete, nonnegative masses
    std::vector<double> h;             // moments

    static MeasureSpec uniform(double a, double b) {
        if (!(a < b)) throw measure_error("uniform measure requires a < b");
        MeasureSpec m;
        m.kind = Kind::uniform_on;
        m.a = a;
        m.b = b;
        return m;
    }

    static MeasureSpec discrete(std::vector<double> nodes, std::vector<double> weights) {
        if (nodes.size() != weights.size() || nodes.empty())
            throw measure_error("discrete measure: nodes/weights size mismatch");
        for (double w : weights)
            if (!(w >= 0.0)) throw measure_error("discrete measure: negative weight");
        MeasureSpec m;
        m.kind = Kind::discrete;
        m.nodes = std::move(nodes);
        m.weights = std::move(weights);
        return m;
    }

    static MeasureSpec moments(std::vector<double> h) {
        if (h.empty() || !(h[0] > 0.0))
            throw measure_error("moment vector needs positive mass h[0]");
        MeasureSpec m;
        m.kind = Kind::moments;
        m.h = std::move(h);
        return m;
    }

    double total_mass() const {
        switch (kind) {
            case Kind::uniform_on: return b - a;
            case Kind::discrete: {
                double s = 0.0;
                for (double w : weights) s += w;
                return s;
            }
            case Kind::moments: return h[0];
        }
        return 0.0;
    }

    // moment int x^m dmu; for Kind::moments only the supplied range is defined
    double moment(int m) const {
        switch (kind) {
            case Kind::uniform_on: {
                // (b^{m+1} - a^{m+1})/(m+1)
                double bp = 1.0, ap = 1.0;
                for (int i = 0; i <= m; ++i) {
                    bp *= b;
                    ap *= a;
                }
                return (bp - ap) / (m + 1);
            }
            case Kind::discrete: {
                double s = 0.0;
                for (std::size_t i = 0; i < nodes.size(); ++i) {
                    double p = 1.0;
                    for (int t = 0; t < m; ++t) p *= nodes[i];
                    s += weights[i] * p;
                }
                return s;
            }
            case Kind::moments:
                if (m < 0 || m >= static_cast<int>(h.size()))
                    throw measure_error("moment index outside supplied vector");
                return h[m];
        }
        return 0.0;
    }
};

} // namespace zolo
