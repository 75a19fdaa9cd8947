#ifndef TRIDEC_INSTRUMENT_HPP
#define TRIDEC_INSTRUMENT_HPP

#include <cstddef>
#include <vector>

#include "tridec/polynomial.hpp"

namespace tridec {

/// Running maxima over every polynomial observed while a Recorder is active
/// on the current thread.
struct Measurements {
    unsigned max_degree = 0;
    unsigned max_height = 0;
    /// Heights seen while inside an unmixed computation.
    unsigned max_height_unmixed = 0;
    /// Largest lc exponent seen per chain position (index 0 = g_1) in chain reductions.
    std::vector<unsigned> max_alpha;
    std::size_t observed = 0;

    void merge(const Measurements& other);
};

/// Installs a Measurements sink for the current thread for its lifetime.
class Recorder {
public:
    explicit Recorder(Measurements& sink);
    ~Recorder();
    Recorder(const Recorder&) = delete;
    Recorder& operator=(const Recorder&) = delete;

private:
    Measurements* previous_;
};

/// Marks the current thread as inside unmixed for its lifetime.
class UnmixedScope {
public:
    UnmixedScope();
    ~UnmixedScope();
    UnmixedScope(const UnmixedScope&) = delete;
    UnmixedScope& operator=(const UnmixedScope&) = delete;

private:
    bool previous_;
};

void observe(const Polynomial& p);
void observe_alpha(std::size_t position, unsigned alpha);

}  // namespace tridec

#endif
