#include "pbred/reference.hpp"

#include <istream>
#include <sstream>

#include "pbred/errors.hpp"

namespace pbred {

const ReferenceStage* ReferenceEntry::stage(const std::string& label) const {
    for (const ReferenceStage& s : stages)
        if (s.label == label) return &s;
    return nullptr;
}

const std::vector<ReferenceEntry>& reference_entries() {
    static const std::vector<ReferenceEntry> entries = {
        {"example1",
         "455937533473",
         "524309",
         "869597",
         {
             {"H0", 174, std::nullopt, 1785, 3318, 1783, 150},
             {"H1", 148, std::nullopt, 1750, 2915, 1407, 128},
             {"H100", 146, 88, 1645, 2828, 1404, 128},
             {"H1000", 144, 121, 1645, 2794, 1411, 126},
             {"H10000", 141, 131, 1645, 2704, 1362, 123},
             {"H100000", 138, 242, 1645, 2591, 1370, 120},
         }},
        {"example2",
         "292951160076082381",
         "539152967",
         "543354443",
         {
             {"H0", 294, std::nullopt, 6930, 8816, 3541, 268},
             {"H1", 200, std::nullopt, 3686, 5061, 2222, 180},
             {"H100", 199, 100, 3388, 4942, 2193, 180},
             {"H1000", 199, 160, 3388, 4924, 2192, 180},
             {"H10000", 189, 111, 3388, 4860, 2074, 173},
             {"H100000", 185, 129, 3388, 4747, 1992, 169},
         }},
        {"example3",
         "1208925727750433490141601",
         "1099511555521",
         "1099511616481",
         {
             {"H0", 430, std::nullopt, 17575, 17762, 5891, 382},
             {"H1", 367, std::nullopt, 16133, 16005, 5256, 367},
             {"H100", 333, 56, 8469, 14203, 6881, 327},
             {"H1000", 257, 289, 1449, 3649, 6180, 257},
             {"H10000", 253, 285, 1449, 3565, 6106, 253},
             {"H100000", 236, 236, 1142, 2961, 5732, 236},
         }},
    };
    return entries;
}

const ReferenceEntry* find_reference(const Integer& product) {
    for (const ReferenceEntry& e : reference_entries())
        if (Integer(e.product) == product) return &e;
    return nullptr;
}

std::string render_reference_table() {
    std::ostringstream out;
    for (const ReferenceEntry& e : reference_entries()) {
        out << "entry " << e.name << ' ' << e.product << " = " << e.factor_p << " * "
            << e.factor_q << '\n';
        for (const ReferenceStage& s : e.stages) {
            out << "  " << s.label << " qubits=" << s.qubits << " deductions=";
            if (s.deductions)
                out << *s.deductions;
            else
                out << '-';
            out << " deg4=" << s.deg4 << " deg3=" << s.deg3 << " deg2=" << s.deg2
                << " deg1=" << s.deg1 << '\n';
        }
    }
    return out.str();
}

namespace {

std::size_t parse_field(const std::string& token, const std::string& key,
                        std::size_t line_no) {
    std::string prefix = key + "=";
    if (token.rfind(prefix, 0) != 0)
        throw ParseError(line_no, "expected " + prefix + "...");
    return static_cast<std::size_t>(std::stoull(token.substr(prefix.size())));
}

}  // namespace

std::vector<ReferenceEntry> parse_reference_table(std::istream& in) {
    std::vector<ReferenceEntry> entries;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "entry") {
            ReferenceEntry e;
            std::string eq, star;
            if (!(ls >> e.name >> e.product >> eq >> e.factor_p >> star >> e.factor_q) ||
                eq != "=" || star != "*")
                throw ParseError(line_no, "malformed entry header");
            entries.push_back(std::move(e));
            continue;
        }
        if (entries.empty()) throw ParseError(line_no, "stage row before any entry");
        ReferenceStage s;
        s.label = first;
        std::string qubits, deductions, d4, d3, d2, d1;
        if (!(ls >> qubits >> deductions >> d4 >> d3 >> d2 >> d1))
            throw ParseError(line_no, "malformed stage row");
        s.qubits = parse_field(qubits, "qubits", line_no);
        if (deductions == "deductions=-")
            s.deductions = std::nullopt;
        else
            s.deductions = parse_field(deductions, "deductions", line_no);
        s.deg4 = parse_field(d4, "deg4", line_no);
        s.deg3 = parse_field(d3, "deg3", line_no);
        s.deg2 = parse_field(d2, "deg2", line_no);
        s.deg1 = parse_field(d1, "deg1", line_no);
        entries.back().stages.push_back(std::move(s));
    }
    return entries;
}

}  // namespace pbred
