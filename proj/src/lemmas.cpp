#include <algorithm>
#include <functional>

#include "kms/error.hpp"
#include "kms/harness.hpp"

namespace kms {

const char* to_string(LemmaId id) {
    switch (id) {
        case LemmaId::L2_6: return "L2.6";
        case LemmaId::L2_7: return "L2.7";
        case LemmaId::L2_8: return "L2.8";
    }
    return "?";
}

LemmaId lemma_from_string(const std::string& name) {
    for (LemmaId id : {LemmaId::L2_6, LemmaId::L2_7, LemmaId::L2_8})
        if (name == to_string(id)) return id;
    throw Error(ErrorCode::invalid_spec, "unknown lemma '" + name + "' (expected L2.6, L2.7 or L2.8)");
}

namespace {

class Checker {
public:
    Checker(LemmaReport& report, const RunOptions& options) : report_(report), options_(options) {}

    double radius(const FamilySpec& f) { return distance_spectral_radius(build_family(f), options_.eigen).lambda1; }

    /// lhs <= rhs with equality exactly when `equality_expected`.
    void weak(const std::string& clause, const std::string& params, const FamilySpec& lhs, const FamilySpec& rhs,
              bool equality_expected) {
        add(clause, params, lhs, rhs, false, equality_expected);
    }

    /// lhs < rhs.
    void strict(const std::string& clause, const std::string& params, const FamilySpec& lhs, const FamilySpec& rhs) {
        add(clause, params, lhs, rhs, true, false);
    }

private:
    void add(const std::string& clause, const std::string& params, const FamilySpec& lhs, const FamilySpec& rhs,
             bool is_strict, bool equality_expected) {
        LemmaInstance inst;
        inst.clause = clause;
        inst.params = params;
        inst.lhs_graph = lhs.describe();
        inst.rhs_graph = rhs.describe();
        inst.lhs = radius(lhs);
        inst.rhs = radius(rhs);
        inst.cmp = compare(inst.lhs, inst.rhs, options_.eps);
        inst.strict = is_strict;
        inst.equality_expected = equality_expected;
        inst.ok = inst.cmp == (equality_expected ? Comparison::equal : Comparison::below);
        report_.failures += !inst.ok;
        report_.instances.push_back(std::move(inst));
    }

    LemmaReport& report_;
    const RunOptions& options_;
};

std::string np(int n, int s) { return "n=" + std::to_string(n) + " s=" + std::to_string(s); }

void compositions(int total, int parts, std::vector<int>& current, const std::function<void(const std::vector<int>&)>& emit) {
    if (parts == 0) {
        if (total == 0) emit(current);
        return;
    }
    for (int first = 1; first <= total - (parts - 1); ++first) {
        current.push_back(first);
        compositions(total - first, parts - 1, current, emit);
        current.pop_back();
    }
}

void check_l26(Checker& c, const LemmaRanges& r) {
    for (int n = 3; n <= r.composition_max_n; ++n)
        for (int s = 1; s <= r.composition_max_s; ++s)
            for (int p = 2; p <= r.composition_max_p && s + p <= n; ++p) {
                std::vector<int> current;
                compositions(n - s, p, current, [&](const std::vector<int>& parts) {
                    // equality iff every part but the largest is a single vertex
                    const int big = static_cast<int>(std::count_if(parts.begin(), parts.end(), [](int x) { return x > 1; }));
                    std::string params = np(n, s) + " parts=";
                    for (std::size_t i = 0; i < parts.size(); ++i) params += (i ? "," : "") + std::to_string(parts[i]);
                    c.weak("-", params, FamilySpec::general(s, {n - s - p + 1}, p - 1), FamilySpec::general(s, parts, 0),
                           big <= 1);
                });
            }
}

void check_l27(Checker& c, const LemmaRanges& r) {
    for (int n = 4; n <= r.max_n; n += 2) {
        for (int s = 1; 2 * s + 4 <= n; ++s)
            c.weak("i", np(n, s), FamilySpec::pendant_pair(n), FamilySpec::clique_odd(n, s), s == 1);
        const int s = n / 2 - 1;
        if (n <= 8)
            c.weak("ii", np(n, s), FamilySpec::split_star(n, s), FamilySpec::pendant_pair(n), n == 4);
        else
            c.strict("iii", np(n, s), FamilySpec::pendant_pair(n), FamilySpec::split_star(n, s));
    }
}

void check_l28(Checker& c, const LemmaRanges& r) {
    for (int n = 2; n <= r.max_n; ++n) {
        for (int s = 1; 2 * s + 2 <= n; ++s)
            c.weak("i", np(n, s), FamilySpec::pendant_clique(n), FamilySpec::clique_even(n, s), s == 1);
        if (n % 2 == 1) {
            c.weak("ii", np(n, (n - 1) / 2), FamilySpec::pendant_clique(n), FamilySpec::split_star(n, (n - 1) / 2), n == 3);
        } else if (n >= 10) {
            c.strict("iii", np(n, n / 2), FamilySpec::pendant_clique(n), FamilySpec::split_star(n, n / 2));
        } else {
            // n = 2 is the degenerate S_{2,1} = K_1 ∨ (K_0 ∪ K_1) = K_2
            c.weak("iv", np(n, n / 2) + (n == 2 ? " (degenerate: both sides are K2)" : ""),
                   FamilySpec::split_star(n, n / 2), FamilySpec::pendant_clique(n), n == 2);
        }
    }
}

}  // namespace

LemmaReport lemma_numeric_check(LemmaId lemma, const LemmaRanges& ranges, const RunOptions& options) {
    LemmaReport report;
    report.lemma = lemma;
    Checker checker(report, options);
    switch (lemma) {
        case LemmaId::L2_6: check_l26(checker, ranges); break;
        case LemmaId::L2_7: check_l27(checker, ranges); break;
        case LemmaId::L2_8: check_l28(checker, ranges); break;
    }
    return report;
}

}  // namespace kms
