#include "stoneprob/harness/function_spec.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>

#include "stoneprob/errors.hpp"

namespace stoneprob::harness {

namespace {

double sign_of(double v) {
    if (v > 0.0) return 1.0;
    if (v < 0.0) return -1.0;
    return 0.0;
}

void validate_spec(const FunctionSpec& s) {
    if (s.arity == 0) {
        throw InvalidArgument("function spec needs at least one argument");
    }
    for (double p : s.params) {
        if (!std::isfinite(p)) {
            throw InvalidArgument("function spec parameters must be finite");
        }
    }
    switch (s.kind) {
    case FunctionKind::Polynomial:
    case FunctionKind::AbsKink:
        if (s.arity != 1 || s.params.size() != 4) {
            throw InvalidArgument("univariate spec expects arity 1 and four parameters");
        }
        break;
    case FunctionKind::MaxCoord:
    case FunctionKind::L1Norm:
        if (!s.params.empty()) {
            throw InvalidArgument("coordinate spec takes no parameters");
        }
        break;
    case FunctionKind::Quadratic:
        if (s.params.size() != 2 * s.arity + 1) {
            throw InvalidArgument("quadratic spec expects 2*arity+1 parameters");
        }
        for (std::size_t i = 0; i < s.arity; ++i) {
            if (s.params[i] < 0.0) {
                throw InvalidArgument("quadratic spec needs nonnegative square coefficients");
            }
        }
        break;
    case FunctionKind::Affine:
        if (s.params.size() != s.arity + 1) {
            throw InvalidArgument("affine spec expects arity+1 parameters");
        }
        break;
    }
}

const char* kind_name(FunctionKind k) {
    switch (k) {
    case FunctionKind::Polynomial: return "polynomial";
    case FunctionKind::AbsKink: return "abs_kink";
    case FunctionKind::MaxCoord: return "max_coord";
    case FunctionKind::L1Norm: return "l1_norm";
    case FunctionKind::Quadratic: return "quadratic";
    case FunctionKind::Affine: return "affine";
    }
    throw InvalidArgument("unknown function kind");
}

FunctionKind kind_from_name(const std::string& name) {
    if (name == "polynomial") return FunctionKind::Polynomial;
    if (name == "abs_kink") return FunctionKind::AbsKink;
    if (name == "max_coord") return FunctionKind::MaxCoord;
    if (name == "l1_norm") return FunctionKind::L1Norm;
    if (name == "quadratic") return FunctionKind::Quadratic;
    if (name == "affine") return FunctionKind::Affine;
    throw InvalidArgument("unknown function kind: " + name);
}

} // namespace

ContinuousFunction FunctionSpec::materialize() const {
    validate_spec(*this);
    const FunctionSpec spec = *this;
    ContinuousFunction::Evaluator eval;
    switch (kind) {
    case FunctionKind::Polynomial:
        eval = [spec](std::span<const double> t) {
            const auto& c = spec.params;
            return c[0] + t[0] * (c[1] + t[0] * (c[2] + t[0] * c[3]));
        };
        break;
    case FunctionKind::AbsKink:
        eval = [spec](std::span<const double> t) {
            const auto& p = spec.params;
            return p[0] * std::fabs(t[0] - p[1]) + p[2] * t[0] + p[3];
        };
        break;
    case FunctionKind::MaxCoord:
        eval = [](std::span<const double> t) {
            return *std::max_element(t.begin(), t.end());
        };
        break;
    case FunctionKind::L1Norm:
        eval = [](std::span<const double> t) {
            double acc = 0.0;
            for (double v : t) acc += std::fabs(v);
            return acc;
        };
        break;
    case FunctionKind::Quadratic:
        eval = [spec](std::span<const double> t) {
            const auto& p = spec.params;
            const std::size_t n = spec.arity;
            double acc = p[2 * n];
            for (std::size_t i = 0; i < n; ++i) {
                acc += p[i] * t[i] * t[i] + p[n + i] * t[i];
            }
            return acc;
        };
        break;
    case FunctionKind::Affine:
        eval = [spec](std::span<const double> t) {
            const auto& p = spec.params;
            double acc = p[spec.arity];
            for (std::size_t i = 0; i < spec.arity; ++i) {
                acc += p[i] * t[i];
            }
            return acc;
        };
        break;
    }
    ContinuousFunction::GridSpacing spacing = [spec](double lo, double hi, double eps) {
        const double slope = spec.lipschitz_bound(lo, hi);
        if (slope <= 0.0) {
            return hi > lo ? hi - lo : 1.0;
        }
        return eps / slope;
    };
    return ContinuousFunction(arity, std::move(eval), std::move(spacing));
}

bool FunctionSpec::convex() const {
    switch (kind) {
    case FunctionKind::Polynomial:
        return params[3] == 0.0 && params[2] >= 0.0;
    case FunctionKind::AbsKink:
        return params[0] >= 0.0;
    case FunctionKind::MaxCoord:
    case FunctionKind::L1Norm:
    case FunctionKind::Quadratic:
    case FunctionKind::Affine:
        return true;
    }
    return false;
}

double FunctionSpec::lipschitz_bound(double lo, double hi) const {
    const double m = std::max(std::fabs(lo), std::fabs(hi));
    switch (kind) {
    case FunctionKind::Polynomial:
        return std::fabs(params[1]) + 2.0 * std::fabs(params[2]) * m
             + 3.0 * std::fabs(params[3]) * m * m;
    case FunctionKind::AbsKink:
        return std::fabs(params[0]) + std::fabs(params[2]);
    case FunctionKind::MaxCoord:
        return 1.0;
    case FunctionKind::L1Norm:
        return static_cast<double>(arity);
    case FunctionKind::Quadratic: {
        double acc = 0.0;
        for (std::size_t i = 0; i < arity; ++i) {
            acc += 2.0 * params[i] * m + std::fabs(params[arity + i]);
        }
        return acc;
    }
    case FunctionKind::Affine: {
        double acc = 0.0;
        for (std::size_t i = 0; i < arity; ++i) {
            acc += std::fabs(params[i]);
        }
        return acc;
    }
    }
    return 0.0;
}

std::vector<AffineMap> FunctionSpec::minorants(
    std::span<const std::vector<double>> at_points) const {
    validate_spec(*this);
    if (!convex()) {
        throw InvalidArgument("affine minorants exist only for convex specs");
    }
    std::vector<AffineMap> out;
    switch (kind) {
    case FunctionKind::MaxCoord:
        for (std::size_t i = 0; i < arity; ++i) {
            std::vector<double> coeffs(arity, 0.0);
            coeffs[i] = 1.0;
            out.push_back(AffineMap{std::move(coeffs), 0.0});
        }
        break;
    case FunctionKind::L1Norm:
        for (const auto& p : at_points) {
            if (p.size() != arity) {
                throw ArityMismatch("tangent point arity mismatch");
            }
            std::vector<double> coeffs(arity);
            for (std::size_t i = 0; i < arity; ++i) coeffs[i] = sign_of(p[i]);
            out.push_back(AffineMap{std::move(coeffs), 0.0});
        }
        break;
    case FunctionKind::Quadratic:
        for (const auto& p : at_points) {
            if (p.size() != arity) {
                throw ArityMismatch("tangent point arity mismatch");
            }
            std::vector<double> coeffs(arity);
            double offset = params[2 * arity];
            for (std::size_t i = 0; i < arity; ++i) {
                coeffs[i] = 2.0 * params[i] * p[i] + params[arity + i];
                offset -= params[i] * p[i] * p[i];
            }
            out.push_back(AffineMap{std::move(coeffs), offset});
        }
        break;
    case FunctionKind::Affine: {
        std::vector<double> coeffs(params.begin(), params.begin() + static_cast<std::ptrdiff_t>(arity));
        out.push_back(AffineMap{std::move(coeffs), params[arity]});
        break;
    }
    case FunctionKind::AbsKink:
        for (const auto& p : at_points) {
            if (p.size() != 1) {
                throw ArityMismatch("tangent point arity mismatch");
            }
            const double slope = params[0] * sign_of(p[0] - params[1]) + params[2];
            const double value =
                params[0] * std::fabs(p[0] - params[1]) + params[2] * p[0] + params[3];
            out.push_back(AffineMap{{slope}, value - slope * p[0]});
        }
        break;
    case FunctionKind::Polynomial:
        for (const auto& p : at_points) {
            if (p.size() != 1) {
                throw ArityMismatch("tangent point arity mismatch");
            }
            const double slope = params[1] + 2.0 * params[2] * p[0];
            const double value = params[0] + p[0] * (params[1] + p[0] * params[2]);
            out.push_back(AffineMap{{slope}, value - slope * p[0]});
        }
        break;
    }
    return out;
}

nlohmann::json FunctionSpec::to_json() const {
    validate_spec(*this);
    return nlohmann::json{
        {"kind", kind_name(kind)},
        {"arity", arity},
        {"params", params},
    };
}

FunctionSpec FunctionSpec::from_json(const nlohmann::json& j) {
    FunctionSpec spec;
    spec.kind = kind_from_name(j.at("kind").get<std::string>());
    spec.arity = j.at("arity").get<std::size_t>();
    spec.params = j.at("params").get<std::vector<double>>();
    validate_spec(spec);
    return spec;
}

} // namespace stoneprob::harness
