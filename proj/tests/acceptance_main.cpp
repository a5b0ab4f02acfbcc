// Acceptance suite: one pass/fail line per criterion, nonzero exit on failure.

#include <cstdio>
#include <cstdlib>

#include "weylext/acceptance.hpp"
#include "weylext/report.hpp"

int main(int argc, char** argv) {
    using namespace weylext;
    std::string reference = report::default_reference_path(3, 2);
    if (argc > 1) reference = argv[1];
    try {
        cal::Options copt;
        copt.ps = {2, 3};
        copt.mode = FieldMode::Both;
        copt.reference_csv = reference;
        std::printf("calibrating conventions ...\n");
        cal::Record rec = cal::calibrate(copt);
        std::printf("calibration: junction=%s product=%s\n",
                    dg::junction_style_name(rec.conv.junction).c_str(),
                    rec.conv.product == model::ProductMatchRule::SumIJK ? "sum_ijk"
                                                                        : "sum_ijka");
        acceptance::Options opt;
        opt.record = rec;
        opt.reference_csv = reference;
        opt.mode = FieldMode::Both;
        bool all = true;
        for (const auto& res : acceptance::run_all(opt)) {
            all = all && res.pass;
            std::printf("%s %d: %s [%.1fs]%s%s\n", res.pass ? "PASS" : "FAIL", res.id,
                        res.name.c_str(), res.seconds, res.detail.empty() ? "" : " -- ",
                        res.detail.c_str());
        }
        return all ? 0 : 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "acceptance suite aborted: %s\n", e.what());
        return 1;
    }
}
