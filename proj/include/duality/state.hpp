#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "duality/basis.hpp"

namespace duality {

using Amplitude = std::complex<double>;

// Sparse two-register wave: basis label -> complex amplitude. Absent keys
// are exactly zero. May be sub-normalized (norm^2 < 1) after recombination;
// the standard half/half divider patterns keep norm^2 <= 1, general divider
// coefficients can exceed it transiently.
class DualityState {
public:
    using TermMap = std::map<BasisLabel, Amplitude>;

    explicit DualityState(RegisterSpec spec) : spec_(spec) {
        if (!spec_.valid()) throw std::invalid_argument("empty register range");
    }

    const RegisterSpec& spec() const { return spec_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Amplitude amplitude(const BasisLabel& label) const {
        const auto it = terms_.find(label);
        return it == terms_.end() ? Amplitude{0.0, 0.0} : it->second;
    }

    void set_amplitude(const BasisLabel& label, Amplitude value) {
        check_label(label);
        if (std::abs(value) < amplitude_prune_threshold) {
            terms_.erase(label);
        } else {
            terms_[label] = value;
        }
    }

    // Adds into the stored amplitude, pruning results that cancel to zero.
    void accumulate(const BasisLabel& label, Amplitude value) {
        check_label(label);
        const auto [it, inserted] = terms_.try_emplace(label, value);
        if (!inserted) it->second += value;
        if (std::abs(it->second) < amplitude_prune_threshold) terms_.erase(it);
    }

    double norm_sq() const {
        double total = 0.0;
        for (const auto& [label, amp] : terms_) total += std::norm(amp);
        return total;
    }

    // Labels carrying nonzero amplitude, ascending.
    std::vector<BasisLabel> support() const {
        std::vector<BasisLabel> labels;
        labels.reserve(terms_.size());
        for (const auto& [label, amp] : terms_) labels.push_back(label);
        return labels;
    }

    void scale(Amplitude factor) {
        if (std::abs(factor) < amplitude_prune_threshold) {
            terms_.clear();
            return;
        }
        for (auto it = terms_.begin(); it != terms_.end();) {
            it->second *= factor;
            if (std::abs(it->second) < amplitude_prune_threshold) {
                it = terms_.erase(it);
            } else {
                ++it;
            }
        }
    }

    // Bulk insertion for callers that produce labels in ascending order.
    void append_term_hint(const BasisLabel& label, Amplitude value) {
        check_label(label);
        if (std::abs(value) < amplitude_prune_threshold) return;
        terms_.emplace_hint(terms_.end(), label, value);
    }

private:
    void check_label(const BasisLabel& label) const {
        if (!spec_.contains(label)) {
            throw std::out_of_range("basis label (" + std::to_string(label.reg1) + ", " +
                                    std::to_string(label.reg2) + ") outside register range");
        }
    }

    RegisterSpec spec_;
    TermMap terms_;
};

// Ordered sub-waves produced by one divider application, together with the
// divider coefficients that scaled them.
struct SubWaveBundle {
    std::vector<DualityState> parts;
    std::vector<Amplitude> coefficients;
};

}  // namespace duality
