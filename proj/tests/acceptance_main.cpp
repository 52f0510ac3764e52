// Acceptance suite: every pinned criterion at its stated tolerance, one
// PASS/FAIL line per criterion, failing sub-checks listed. Exit 0 only if
// every criterion holds.

#include <cstdio>
#include <string>
#include <vector>

#include "altxi/checks.hpp"

using namespace altxi;

namespace {

struct Criterion {
    std::string label;
    CheckList checks;
};

bool report(const Criterion& c) {
    bool pass = true;
    double worst = 0.0;
    for (const auto& r : c.checks) {
        pass = pass && r.pass;
        worst = std::max(worst, r.residual / r.tol);
    }
    std::printf("%s %s (%zu checks, worst residual/tol = %.2e)\n",
                pass ? "PASS" : "FAIL", c.label.c_str(), c.checks.size(), worst);
    if (!pass)
        for (const auto& r : c.checks)
            if (!r.pass)
                std::printf("     FAIL %-50s residual=%.6e tol=%.0e\n", r.name.c_str(),
                            r.residual, r.tol);
    return pass;
}

CheckList concat(std::initializer_list<CheckList> lists) {
    CheckList out;
    for (const auto& l : lists) out.insert(out.end(), l.begin(), l.end());
    return out;
}

}  // namespace

int main() {
    EvalSettings st;
    std::vector<Criterion> criteria;
    criteria.push_back({"criterion 1: Table 2 incomplete-gamma regression (<= 1e-8)",
                        check_table2(st)});
    criteria.push_back({"criterion 2: worked example at s = 0.5+12i",
                        check_paper_example(st)});
    criteria.push_back({"criterion 3: Table 1 values", check_table1(st)});
    criteria.push_back({"criterion 4: kernel values", check_kernel_values(st)});
    criteria.push_back({"criterion 5: kernel integrals by quadrature",
                        check_integrals({}, st)});
    criteria.push_back({"criterion 6: values at s = 1/2", check_half_values(st)});
    criteria.push_back({"criterion 7: property suites",
                        concat({check_reflection(st), check_symmetry_random(st),
                                check_method_agreement(st), check_quartet(st),
                                check_theta(st), check_additivity_grid(st),
                                check_gamma_properties(st)})});
    criteria.push_back({"criterion 8: zero scan cross-agreement", check_scan_cross(st)});
    criteria.push_back({"criterion 9: quadrature oracle agreement", check_oracle_grid(st)});

    int failed = 0;
    for (const auto& c : criteria)
        if (!report(c)) ++failed;
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
