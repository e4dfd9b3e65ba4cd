#include "pbred/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "pbred/reference.hpp"

namespace pbred {

namespace {

std::vector<std::size_t> degree_columns(const PipelineResult& result) {
    std::size_t top = 0;
    for (const PipelineStage& s : result.stages)
        if (!s.profile.terms.empty()) top = std::max(top, s.profile.terms.rbegin()->first);
    std::vector<std::size_t> cols;
    for (std::size_t d = top + 1; d-- > 0;) cols.push_back(d);
    return cols;
}

std::string deductions_cell(const PipelineStage& s) {
    return s.deductions_applied ? std::to_string(*s.deductions_applied) : "-";
}

// The published row comparable to our last stage, if the run's search budget
// matches one of the published ones.
const ReferenceStage* matching_final_stage(const ReferenceEntry& entry,
                                           const PipelineConfig& config) {
    if (!config.states) return nullptr;
    return entry.stage("H" + std::to_string(*config.states));
}

std::string signed_delta(std::size_t ours, std::size_t published) {
    long long d = static_cast<long long>(ours) - static_cast<long long>(published);
    std::string s = std::to_string(d);
    if (d >= 0) s.insert(s.begin(), '+');
    return s;
}

void append_comparison(std::ostream& out, const std::string& label,
                       const DegreeProfile& ours, const ReferenceStage& ref) {
    out << "  " << std::left << std::setw(8) << label << std::right;
    out << "  qubits " << ours.variable_count << " (" << signed_delta(ours.variable_count, ref.qubits) << ")";
    const std::pair<std::size_t, std::size_t> degs[] = {
        {4, ref.deg4}, {3, ref.deg3}, {2, ref.deg2}, {1, ref.deg1}};
    for (auto [d, published] : degs) {
        out << "  deg" << d << ' ' << ours.at(d) << " ("
            << signed_delta(ours.at(d), published) << ")";
    }
    out << '\n';
}

}  // namespace

std::string render_stage_table(const PipelineResult& result,
                               const std::optional<Integer>& product) {
    std::vector<std::size_t> cols = degree_columns(result);

    std::size_t label_w = 5;
    for (const PipelineStage& s : result.stages) label_w = std::max(label_w, s.label.size());

    std::ostringstream out;
    out << std::left << std::setw(static_cast<int>(label_w)) << "stage" << std::right;
    out << "  " << std::setw(6) << "qubits" << "  " << std::setw(10) << "deductions";
    for (std::size_t d : cols) out << "  " << std::setw(6) << ("deg" + std::to_string(d));
    out << '\n';

    for (const PipelineStage& s : result.stages) {
        out << std::left << std::setw(static_cast<int>(label_w)) << s.label << std::right;
        out << "  " << std::setw(6) << s.profile.variable_count;
        out << "  " << std::setw(10) << deductions_cell(s);
        for (std::size_t d : cols) out << "  " << std::setw(6) << s.profile.at(d);
        out << '\n';
    }

    const ReferenceEntry* entry = product ? find_reference(*product) : nullptr;
    if (entry) {
        out << '\n'
            << "published counts for " << entry->name << " (" << entry->product << " = "
            << entry->factor_p << " * " << entry->factor_q << "), delta is ours minus published:\n";
        if (const ReferenceStage* ref = entry->stage("H0"))
            append_comparison(out, "H0", result.stages.front().profile, *ref);
        if (const ReferenceStage* ref = entry->stage("H1"))
            if (result.stages.size() > 1)
                append_comparison(out, "H1", result.stages[1].profile, *ref);
        if (const ReferenceStage* ref = matching_final_stage(*entry, result.config))
            append_comparison(out, ref->label, result.stages.back().profile, *ref);
    }
    return out.str();
}

std::string render_machine_report(const PipelineResult& result,
                                  const std::optional<Integer>& product) {
    std::ostringstream out;
    out << "stages=" << result.stages.size() << '\n';
    for (std::size_t i = 0; i < result.stages.size(); ++i) {
        const PipelineStage& s = result.stages[i];
        out << "stage." << i << ".label=" << s.label << '\n';
        out << "stage." << i << ".qubits=" << s.profile.variable_count << '\n';
        out << "stage." << i << ".deductions=" << deductions_cell(s) << '\n';
        out << "stage." << i << ".terms=";
        bool first = true;
        for (auto it = s.profile.terms.rbegin(); it != s.profile.terms.rend(); ++it) {
            if (!first) out << ' ';
            out << "deg" << it->first << ':' << it->second;
            first = false;
        }
        out << '\n';
    }
    out << "chain.length=" << result.substitution.size() << '\n';
    out << "steps.count=" << result.steps.size() << '\n';
    if (product) {
        const ReferenceEntry* entry = find_reference(*product);
        out << "reference.match=" << (entry ? entry->name : "-") << '\n';
    }
    return out.str();
}

}  // namespace pbred
