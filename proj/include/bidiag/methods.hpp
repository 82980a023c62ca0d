#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bidiag/dense_oracle.hpp"
#include "bidiag/derivative.hpp"
#include "bidiag/errors.hpp"
#include "bidiag/matrix.hpp"
#include "bidiag/subtraction_free.hpp"
#include "bidiag/subtractive.hpp"
#include "bidiag/unified.hpp"

namespace bidiag {

/// The five trace backends. The short labels are the stable names used on
/// the command line and in reports.
enum class Method {
    subtractive,  // "kyn11"  - original diagonal recurrence, subtraction inside
    subfree,      // "ykn12"  - subtraction-free diagonal recurrence
    derivative,   // "ykyy14" - factorial-scaled derivative recurrence
    unified,      // "new"    - factorial-free direct trace recurrence
    oracle        // "oracle" - dense brute force
};

inline const char* to_string(Method m) {
    switch (m) {
        case Method::subtractive: return "kyn11";
        case Method::subfree: return "ykn12";
        case Method::derivative: return "ykyy14";
        case Method::unified: return "new";
        case Method::oracle: return "oracle";
    }
    return "?";
}

inline std::optional<Method> parse_method(const std::string& label) {
    if (label == "kyn11") return Method::subtractive;
    if (label == "ykn12") return Method::subfree;
    if (label == "ykyy14") return Method::derivative;
    if (label == "new") return Method::unified;
    if (label == "oracle") return Method::oracle;
    return std::nullopt;
}

inline std::vector<Method> all_methods() {
    return {Method::subtractive, Method::subfree, Method::derivative, Method::unified,
            Method::oracle};
}

struct TraceOptions {
    ZDirection z_direction = ZDirection::forward;  // kyn11 only
    std::optional<Variant> variant;                // ykyy14 (default plain), new (default tilde)
};

/// J_M(B) through the selected backend. Numeric failures surface as
/// OverflowError / FactorialOverflow; cancellation warnings of the
/// subtractive backend are not reported here (see trace_table).
inline double trace(const BidiagonalMatrix& B, int M, Method method,
                    const TraceOptions& opts = {}) {
    if (M < 1) throw Error("trace needs M >= 1");
    switch (method) {
        case Method::subtractive: return trace_subtractive(B, M, opts.z_direction).by_upper;
        case Method::subfree: return trace_subfree(B, M);
        case Method::derivative:
            return trace_derivative(B, M, opts.variant.value_or(Variant::plain));
        case Method::unified: return trace_new(B, M, opts.variant.value_or(Variant::tilde));
        case Method::oracle: return trace_oracle(B, M);
    }
    throw Error("unknown method");
}

/// One trace value with its in-band diagnostics.
struct TraceCell {
    std::optional<double> value;
    std::vector<std::string> warnings;
    std::string error;  // empty when the cell completed
};

/// J_1..J_Mmax for one matrix and one backend; failed orders keep their
/// error text and leave the value empty.
struct TraceTable {
    Method method = Method::unified;
    std::vector<TraceCell> cells;  // index m-1 holds order m
};

inline TraceTable trace_table(const BidiagonalMatrix& B, int Mmax, Method method,
                              const TraceOptions& opts = {}) {
    TraceTable t;
    t.method = method;
    t.cells.resize(static_cast<std::size_t>(Mmax));
    for (int m = 1; m <= Mmax; ++m) {
        TraceCell& cell = t.cells[static_cast<std::size_t>(m - 1)];
        try {
            if (method == Method::subtractive) {
                SubtractiveTrace r = trace_subtractive(B, m, opts.z_direction);
                cell.value = r.by_upper;
                for (const CancellationWarning& w : r.warnings)
                    cell.warnings.push_back(w.describe());
            } else {
                cell.value = trace(B, m, method, opts);
            }
        } catch (const Error& err) {
            cell.error = err.what();
        }
    }
    return t;
}

namespace detail {

inline bool trace_completes(const BidiagonalMatrix& B, int M, Method method,
                            const TraceOptions& opts) {
    try {
        return std::isfinite(trace(B, M, method, opts));
    } catch (const Error&) {
        return false;
    }
}

}  // namespace detail

/// Largest order M <= cap the backend completes without leaving the binary64
/// range (or hitting a factorial/binomial guard). Failure is monotone in M,
/// so an exponential probe plus bisection suffices.
inline int overflow_reach(const BidiagonalMatrix& B, Method method, int cap,
                          const TraceOptions& opts = {}) {
    if (cap < 1) throw Error("overflow_reach needs cap >= 1");
    if (!detail::trace_completes(B, 1, method, opts)) return 0;
    int lo = 1;
    int hi = 0;
    int probe = 2;
    while (probe < cap) {
        if (detail::trace_completes(B, probe, method, opts)) {
            lo = probe;
            probe *= 2;
        } else {
            hi = probe;
            break;
        }
    }
    if (hi == 0) {
        if (detail::trace_completes(B, cap, method, opts)) return cap;
        hi = cap;
    }
    while (hi - lo > 1) {
        int mid = lo + (hi - lo) / 2;
        if (detail::trace_completes(B, mid, method, opts))
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

}  // namespace bidiag
