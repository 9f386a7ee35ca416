#include "stoneprob/adapted_process.hpp"

#include <utility>

namespace stoneprob {

AdaptedProcess::AdaptedProcess(std::shared_ptr<const Filtration> filtration,
                               std::vector<LatticeElement> path)
    : filtration_(std::move(filtration)), path_(std::move(path)) {
    if (!filtration_) throw InvalidArgument("AdaptedProcess: null filtration");
    if (path_.empty()) throw InvalidArgument("AdaptedProcess: empty path");
    for (std::size_t t = 0; t < path_.size(); ++t) {
        require_same_space(filtration_->space(), path_[t].space(), "AdaptedProcess");
        if (!path_[t].is_finite()) throw NotFinite("AdaptedProcess: path values must be finite");
        if (!filtration_->stage(t + 1).fixes(path_[t]))
            throw NotAdapted("AdaptedProcess: X_" + std::to_string(t + 1) +
                             " is not measurable at stage " + std::to_string(t + 1));
    }
}

const LatticeElement& AdaptedProcess::at(std::size_t t) const {
    if (t == 0 || t > path_.size())
        throw InvalidArgument("AdaptedProcess::at: time out of range");
    return path_[t - 1];
}

bool AdaptedProcess::is_increasing() const {
    for (std::size_t t = 0; t + 1 < path_.size(); ++t)
        if (!path_[t].leq(path_[t + 1])) return false;
    return true;
}

bool AdaptedProcess::indicator_valued() const {
    for (const LatticeElement& x : path_)
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i] != 0.0 && x[i] != 1.0) return false;
    return true;
}

const char* to_string(ProcessClass c) {
    switch (c) {
    case ProcessClass::Martingale: return "martingale";
    case ProcessClass::Submartingale: return "submartingale";
    case ProcessClass::Supermartingale: return "supermartingale";
    default: return "none";
    }
}

ProcessClass classify_process(const AdaptedProcess& process) {
    bool sub = true;
    bool super = true;
    for (std::size_t t = 1; t <= process.horizon() && (sub || super); ++t) {
        for (std::size_t s = t; s <= process.horizon() && (sub || super); ++s) {
            LatticeElement projected = process.filtration().stage(t).apply(process.at(s));
            if (!process.at(t).leq(projected)) sub = false;
            if (!projected.leq(process.at(t))) super = false;
        }
    }
    if (sub && super) return ProcessClass::Martingale;
    if (sub) return ProcessClass::Submartingale;
    if (super) return ProcessClass::Supermartingale;
    return ProcessClass::None;
}

AdaptedProcess doob_martingale(std::shared_ptr<const Filtration> filtration,
                               const LatticeElement& terminal, std::size_t horizon) {
    if (!filtration) throw InvalidArgument("doob_martingale: null filtration");
    if (horizon == 0) throw InvalidArgument("doob_martingale: horizon must be positive");
    std::vector<LatticeElement> path;
    path.reserve(horizon);
    for (std::size_t t = 1; t <= horizon; ++t)
        path.push_back(filtration->stage(t).apply(terminal));
    return AdaptedProcess(std::move(filtration), std::move(path));
}

} // namespace stoneprob
