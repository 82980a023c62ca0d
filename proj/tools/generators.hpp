#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "bidiag/errors.hpp"
#include "bidiag/matrix.hpp"

namespace cli {

/// Deterministic uniform variates from raw mt19937_64 bits; the same seed
/// produces the same suite on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
    std::mt19937_64 gen_;
};

/// Entry distribution spec: uniform:lo:hi, loguniform:lo:hi, graded:ratio.
struct Distribution {
    enum class Kind { uniform, loguniform, graded } kind = Kind::uniform;
    double lo = 0.5;
    double hi = 2.0;
    double ratio = 10.0;
};

inline Distribution parse_distribution(const std::string& spec) {
    auto split = [](const std::string& s) {
        std::vector<std::string> parts;
        std::size_t start = 0;
        for (std::size_t i = 0; i <= s.size(); ++i)
            if (i == s.size() || s[i] == ':') {
                parts.push_back(s.substr(start, i - start));
                start = i + 1;
            }
        return parts;
    };
    std::vector<std::string> parts = split(spec);
    auto num = [&](const std::string& s) {
        try {
            std::size_t used = 0;
            double v = std::stod(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            throw bidiag::Error("cannot parse '" + s + "' in distribution spec '" + spec + "'");
        }
    };
    Distribution d;
    if (parts[0] == "uniform" || parts[0] == "loguniform") {
        d.kind = parts[0] == "uniform" ? Distribution::Kind::uniform
                                       : Distribution::Kind::loguniform;
        if (parts.size() != 3)
            throw bidiag::Error("distribution '" + spec + "' needs the form " + parts[0] +
                                ":lo:hi");
        d.lo = num(parts[1]);
        d.hi = num(parts[2]);
        if (!(d.lo > 0.0))
            throw bidiag::Error("distribution '" + spec + "' has nonpositive support");
        if (!(d.hi >= d.lo)) throw bidiag::Error("distribution '" + spec + "' has hi < lo");
    } else if (parts[0] == "graded") {
        d.kind = Distribution::Kind::graded;
        if (parts.size() != 2)
            throw bidiag::Error("distribution '" + spec + "' needs the form graded:ratio");
        d.ratio = num(parts[1]);
        if (!(d.ratio > 0.0)) throw bidiag::Error("graded ratio must be positive");
    } else {
        throw bidiag::Error("unknown distribution '" + parts[0] +
                            "' (choose uniform, loguniform, graded)");
    }
    return d;
}

/// Draws one matrix. graded:r is deterministic: q[i] = r^-i, e[i] = 1.
inline bidiag::BidiagonalMatrix generate_matrix(const Distribution& d, std::size_t n, Rng& rng) {
    std::vector<double> q(n), e(n > 0 ? n - 1 : 0);
    switch (d.kind) {
        case Distribution::Kind::uniform:
            for (double& x : q) x = rng.uniform(d.lo, d.hi);
            for (double& x : e) x = rng.uniform(d.lo, d.hi);
            break;
        case Distribution::Kind::loguniform: {
            const double llo = std::log(d.lo), lhi = std::log(d.hi);
            for (double& x : q) x = std::exp(rng.uniform(llo, lhi));
            for (double& x : e) x = std::exp(rng.uniform(llo, lhi));
            break;
        }
        case Distribution::Kind::graded: {
            double value = 1.0;
            for (double& x : q) {
                x = value;
                value /= d.ratio;
            }
            for (double& x : e) x = 1.0;
            break;
        }
    }
    return bidiag::BidiagonalMatrix(std::move(q), std::move(e));
}

}  // namespace cli
