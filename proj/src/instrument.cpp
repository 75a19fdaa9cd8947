#include "tridec/instrument.hpp"

#include <algorithm>

namespace tridec {

namespace {
thread_local Measurements* active = nullptr;
thread_local bool in_unmixed = false;
}  // namespace

void Measurements::merge(const Measurements& other) {
    max_degree = std::max(max_degree, other.max_degree);
    max_height = std::max(max_height, other.max_height);
    max_height_unmixed = std::max(max_height_unmixed, other.max_height_unmixed);
    if (max_alpha.size() < other.max_alpha.size()) max_alpha.resize(other.max_alpha.size(), 0);
    for (std::size_t i = 0; i < other.max_alpha.size(); ++i) max_alpha[i] = std::max(max_alpha[i], other.max_alpha[i]);
    observed += other.observed;
}

Recorder::Recorder(Measurements& sink) : previous_(active) { active = &sink; }
Recorder::~Recorder() { active = previous_; }

UnmixedScope::UnmixedScope() : previous_(in_unmixed) { in_unmixed = true; }
UnmixedScope::~UnmixedScope() { in_unmixed = previous_; }

void observe(const Polynomial& p) {
    if (!active || p.is_zero()) return;
    unsigned h = p.height();
    active->max_height = std::max(active->max_height, h);
    active->max_degree = std::max(active->max_degree, p.total_degree().value_or(0));
    if (in_unmixed) active->max_height_unmixed = std::max(active->max_height_unmixed, h);
    ++active->observed;
}

void observe_alpha(std::size_t position, unsigned alpha) {
    if (!active) return;
    if (active->max_alpha.size() <= position) active->max_alpha.resize(position + 1, 0);
    active->max_alpha[position] = std::max(active->max_alpha[position], alpha);
}

}  // namespace tridec
