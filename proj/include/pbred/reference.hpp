#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pbred/polynomial.hpp"

namespace pbred {

// Published benchmark counts for the three factorization case studies, used
// by reports to print deltas. Term-count rows are soft targets: the carry
// and judgment conventions of the published runs are not fully specified,
// so matching them exactly is not expected.
struct ReferenceStage {
    std::string label;
    std::size_t qubits = 0;
    std::optional<std::size_t> deductions;
    std::size_t deg4 = 0;
    std::size_t deg3 = 0;
    std::size_t deg2 = 0;
    std::size_t deg1 = 0;
};

struct ReferenceEntry {
    std::string name;
    std::string product;
    std::string factor_p;
    std::string factor_q;
    std::vector<ReferenceStage> stages;

    const ReferenceStage* stage(const std::string& label) const;
};

const std::vector<ReferenceEntry>& reference_entries();
const ReferenceEntry* find_reference(const Integer& product);

// data/reference_counts.txt uses this same serialization; a test keeps the
// file and the embedded table identical.
std::string render_reference_table();
std::vector<ReferenceEntry> parse_reference_table(std::istream& in);

}  // namespace pbred
