#include "polyspace/edge_lengths.hpp"

#include <cmath>
#include <sstream>

#include "polyspace/errors.hpp"

namespace polyspace {

EdgeLengths::EdgeLengths(std::vector<double> lengths) : lengths_(std::move(lengths)) {
    if (lengths_.size() < 3) {
        throw ValidationError("edge lengths require at least 3 entries, got " +
                              std::to_string(lengths_.size()));
    }
    for (std::size_t i = 0; i < lengths_.size(); ++i) {
        if (!(lengths_[i] > 0.0) || !std::isfinite(lengths_[i])) {
            throw ValidationError("edge length " + std::to_string(i + 1) +
                                  " must be a finite positive number");
        }
        total_ += lengths_[i];
        if (lengths_[i] > lengths_[max_index_]) max_index_ = i;
    }
}

std::string EdgeLengths::str() const {
    std::ostringstream out;
    out.precision(17);
    out << "(";
    for (std::size_t i = 0; i < lengths_.size(); ++i) {
        if (i > 0) out << ",";
        out << lengths_[i];
    }
    out << ")";
    return out.str();
}

const char* to_string(FeasibilityClass c) {
    switch (c) {
        case FeasibilityClass::Infeasible: return "Infeasible";
        case FeasibilityClass::Border: return "Border";
        case FeasibilityClass::Interior: return "Interior";
    }
    return "?";
}

FeasibilityClass classify_feasibility(const EdgeLengths& ell) {
    // Exact comparisons against the per-index complement sum. Summing the
    // complement directly (rather than total - l_i) avoids cancellation.
    bool border = false;
    for (std::size_t i = 0; i < ell.count(); ++i) {
        double rest = 0.0;
        for (std::size_t j = 0; j < ell.count(); ++j) {
            if (j != i) rest += ell[j];
        }
        if (ell[i] > rest) return FeasibilityClass::Infeasible;
        if (ell[i] == rest) border = true;
    }
    return border ? FeasibilityClass::Border : FeasibilityClass::Interior;
}

}  // namespace polyspace
