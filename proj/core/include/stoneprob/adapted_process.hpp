#pragma once

#include <memory>
#include <vector>

#include "stoneprob/filtration.hpp"
#include "stoneprob/lattice_element.hpp"

namespace stoneprob {

// A finite-horizon process X_1, ..., X_T adapted to a filtration: each X_t is
// fixed by stage t (constant on its blocks). Validated on construction.
// The path may be shorter or longer than the filtration's stage list; stages
// extend constantly beyond their horizon.
class AdaptedProcess {
public:
    AdaptedProcess(std::shared_ptr<const Filtration> filtration, std::vector<LatticeElement> path);

    const Filtration& filtration() const { return *filtration_; }
    const std::shared_ptr<const Filtration>& filtration_ptr() const { return filtration_; }
    std::size_t horizon() const { return path_.size(); }

    // 1-based, matching stage numbering.
    const LatticeElement& at(std::size_t t) const;
    const std::vector<LatticeElement>& path() const { return path_; }

    bool is_increasing() const;
    bool indicator_valued() const;

private:
    std::shared_ptr<const Filtration> filtration_;
    std::vector<LatticeElement> path_;
};

enum class ProcessClass { Martingale, Submartingale, Supermartingale, None };

const char* to_string(ProcessClass c);

// Compares F_t(X_s) with X_t pointwise for every t <= s and reports the
// strongest label that holds: equality everywhere gives Martingale,
// F_t(X_s) >= X_t gives Submartingale, <= gives Supermartingale.
ProcessClass classify_process(const AdaptedProcess& process);

// The martingale X_t = F_t(terminal) closed by a finite terminal value.
AdaptedProcess doob_martingale(std::shared_ptr<const Filtration> filtration,
                               const LatticeElement& terminal, std::size_t horizon);

} // namespace stoneprob
