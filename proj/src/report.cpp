#include <cstdio>
#include <sstream>

#include "json.hpp"

#include "kms/harness.hpp"

namespace kms {

std::string format_number(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

namespace {

double rounded(double x) { return std::stod(format_number(x)); }

const char* yes_no(bool b) { return b ? "true" : "false"; }

nlohmann::ordered_json metadata(const TheoremReport& r) {
    nlohmann::ordered_json m;
    m["spec"] = {{"theorem", to_string(r.spec.id)}, {"n", r.spec.n}, {"k", r.spec.k}, {"d", r.spec.d}, {"branch", r.branch}};
    m["eps"] = r.eps;
    m["tol"] = r.tol;
    m["source"] = r.source;
    m["exhaustive"] = r.exhaustive;
    m["rows"] = r.rows.size();
    m["violations"] = r.violations;
    m["exceptions"] = r.exceptions;
    m["exceptions_consistent"] = r.exceptions_consistent;
    if (!r.note.empty()) m["note"] = r.note;
    return m;
}

}  // namespace

std::string to_csv(const TheoremReport& r) {
    const PropertyQuery q = property_for(r.spec);
    std::ostringstream out;
    out << "graph6,n,k,d,lambda1,threshold,cmp,property,verdict,exception,violation\n";
    for (const VerdictRow& row : r.rows)
        out << row.graph6 << ',' << r.spec.n << ',' << r.spec.k << ',' << r.spec.d << ',' << format_number(row.lambda1)
            << ',' << format_number(row.threshold) << ',' << to_string(row.cmp) << ',' << to_string(q.property) << ','
            << yes_no(row.property) << ',' << yes_no(row.exception) << ',' << yes_no(row.violation) << '\n';
    return out.str();
}

std::string to_json(const TheoremReport& r) {
    const PropertyQuery q = property_for(r.spec);
    nlohmann::ordered_json doc;
    doc["metadata"] = metadata(r);
    auto& rows = doc["rows"] = nlohmann::ordered_json::array();
    for (const VerdictRow& row : r.rows)
        rows.push_back({{"graph6", row.graph6},
                        {"n", r.spec.n},
                        {"k", r.spec.k},
                        {"d", r.spec.d},
                        {"lambda1", rounded(row.lambda1)},
                        {"threshold", rounded(row.threshold)},
                        {"cmp", to_string(row.cmp)},
                        {"property", to_string(q.property)},
                        {"verdict", row.property},
                        {"exception", row.exception},
                        {"violation", row.violation}});
    return doc.dump(2) + "\n";
}

std::string to_csv(const LemmaReport& r) {
    std::ostringstream out;
    out << "lemma,clause,params,lhs_graph,rhs_graph,lhs,rhs,cmp,relation,ok\n";
    for (const LemmaInstance& i : r.instances)
        out << to_string(r.lemma) << ',' << i.clause << ",\"" << i.params << "\"," << i.lhs_graph << ',' << i.rhs_graph
            << ',' << format_number(i.lhs) << ',' << format_number(i.rhs) << ',' << to_string(i.cmp) << ','
            << (i.strict ? "lt" : i.equality_expected ? "eq" : "le-strict") << ',' << yes_no(i.ok) << '\n';
    return out.str();
}

std::string to_json(const LemmaReport& r) {
    nlohmann::ordered_json doc;
    doc["metadata"] = {{"lemma", to_string(r.lemma)}, {"instances", r.instances.size()}, {"failures", r.failures}};
    auto& rows = doc["instances"] = nlohmann::ordered_json::array();
    for (const LemmaInstance& i : r.instances)
        rows.push_back({{"clause", i.clause},
                        {"params", i.params},
                        {"lhs_graph", i.lhs_graph},
                        {"rhs_graph", i.rhs_graph},
                        {"lhs", rounded(i.lhs)},
                        {"rhs", rounded(i.rhs)},
                        {"cmp", to_string(i.cmp)},
                        {"strict", i.strict},
                        {"equality_expected", i.equality_expected},
                        {"ok", i.ok}});
    return doc.dump(2) + "\n";
}

}  // namespace kms
