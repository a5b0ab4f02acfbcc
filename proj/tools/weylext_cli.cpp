// Command-line front end: oracle runs, calibration, block construction,
// Ext queries, quiver export and the verification suite.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "weylext/acceptance.hpp"
#include "weylext/report.hpp"

namespace {

using namespace weylext;

FieldMode parse_mode(const std::string& s) {
    if (s == "rational") return FieldMode::Rational;
    if (s == "prime") return FieldMode::Prime;
    if (s == "both") return FieldMode::Both;
    throw CLI::ValidationError("--field must be rational, prime or both");
}

void write_out(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw InvariantError("cannot write " + path);
    out << text;
}

cal::Record need_record(const std::string& cache_path) {
    auto rec = cal::load_record(cache_path);
    if (!rec)
        throw VerifyError("no calibration record at " + cache_path +
                          "; run `weylext calibrate` first");
    return *rec;
}

std::string dims_json(const GradedDims& d) {
    nlohmann::json j = nlohmann::json::array();
    for (auto& [key, n] : d.entries())
        j.push_back({{"s", key.s}, {"t", key.t}, {"j", key.j}, {"k", key.k}, {"dim", n}});
    return j.dump(2) + "\n";
}

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::vector<int> parse_vertex(const std::string& s, int q) {
    std::vector<int> v;
    std::stringstream ss(s);
    std::string cell;
    while (std::getline(ss, cell, ',')) v.push_back(std::stoi(cell));
    if (static_cast<int>(v.size()) == q) return v;
    throw VerifyError("vertex must be a " + std::to_string(q) + "-tuple like 1,2");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graded Ext algebras of Weyl module collections for GL2 blocks"};
    app.require_subcommand(1);

    std::string field = "rational";
    std::string cache = cal::default_record_path();
    std::string format = "text";
    std::uint64_t seed = 0x5eed;
    app.add_option("--field", field, "scalar field: rational, prime or both");
    app.add_option("--cache", cache, "calibration record path");
    app.add_option("--format", format, "output format where applicable: text, json, csv");
    app.add_option("--seed", seed, "seed for randomized property tests");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "homology dims of a tensor-degree row");
    int o_p = 3, o_i = -1, o_cap = 6;
    std::string o_out;
    oracle->add_option("-p", o_p, "number of vertices")->required();
    oracle->add_option("-i", o_i, "tensor degree (<= 1)")->required();
    oracle->add_option("--cap", o_cap, "bound on |i|");
    oracle->add_option("-o,--output", o_out, "output file (default stdout)");

    // calibrate
    auto* calibrate = app.add_subcommand("calibrate", "pin the convention flags");
    std::vector<int> c_ps = {2, 3};
    std::vector<std::string> c_over;
    std::string c_ref;
    calibrate->add_option("--p-list", c_ps, "vertex counts used for validation");
    calibrate->add_option("--override", c_over, "force a flag, e.g. xi_count=j_minus_k");
    calibrate->add_option("--reference", c_ref, "golden data file (default shipped)");

    // build
    auto* build = app.add_subcommand("build", "construct a block algebra");
    int b_p = 3, b_q = 2;
    long b_kmax = -1;
    bool b_products = false;
    std::string b_out;
    build->add_option("-p", b_p)->required();
    build->add_option("-q", b_q)->required();
    build->add_option("--k-max", b_kmax, "bound the homological degree (-1 = none)");
    build->add_flag("--products", b_products, "include the product table");
    build->add_option("-o,--output", b_out, "output file (default stdout)");

    // ext
    auto* ext = app.add_subcommand("ext", "graded Ext dimension between two Weyl modules");
    int e_p = 3, e_q = 2, e_k = 0;
    std::string e_from, e_to, e_ref;
    std::optional<int> e_j;
    ext->add_option("-p", e_p)->required();
    ext->add_option("-q", e_q)->required();
    ext->add_option("--from", e_from, "source vertex: tuple 1,2 or reference label")
        ->required();
    ext->add_option("--to", e_to, "target vertex")->required();
    ext->add_option("--k", e_k, "homological degree")->required();
    int e_j_raw = 0;
    auto* jopt = ext->add_option("--j", e_j_raw, "restrict to one internal degree");
    ext->add_option("--reference", e_ref, "reference file for integer vertex labels");

    // quiver
    auto* quiver_cmd = app.add_subcommand("quiver", "arrows of the block algebra");
    int qv_p = 3, qv_q = 2;
    std::string qv_out;
    quiver_cmd->add_option("-p", qv_p)->required();
    quiver_cmd->add_option("-q", qv_q)->required();
    quiver_cmd->add_option("-o,--output", qv_out, "output file (default stdout)");

    // cartan
    auto* cartan_cmd = app.add_subcommand("cartan", "graded Cartan table");
    int ct_p = 3, ct_q = 2;
    std::string ct_out;
    cartan_cmd->add_option("-p", ct_p)->required();
    cartan_cmd->add_option("-q", ct_q)->required();
    cartan_cmd->add_option("-o,--output", ct_out, "output file (default stdout)");

    // polytope
    auto* poly = app.add_subcommand("polytope", "dump basis points of the lattice model");
    int pl_p = 3, pl_imin = -4, pl_imax = 1;
    std::string pl_out;
    poly->add_option("-p", pl_p)->required();
    poly->add_option("--imin", pl_imin);
    poly->add_option("--imax", pl_imax);
    poly->add_option("-o,--output", pl_out, "output file (default stdout)");

    // products
    auto* prods = app.add_subcommand("products", "pairwise product table of basis points");
    int pr_p = 3, pr_imin = -2, pr_imax = 1;
    std::string pr_out;
    prods->add_option("-p", pr_p)->required();
    prods->add_option("--imin", pr_imin);
    prods->add_option("--imax", pr_imax);
    prods->add_option("-o,--output", pr_out, "output file (default stdout)");

    // verify
    auto* verify = app.add_subcommand("verify", "run the acceptance criteria");
    int v_p = 3, v_q = 2;
    std::string v_ref;
    verify->add_option("-p", v_p);
    verify->add_option("-q", v_q);
    verify->add_option("--reference", v_ref, "golden data file (default shipped)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        FieldMode mode = parse_mode(field);

        if (oracle->parsed()) {
            if (!is_prime(o_p))
                std::cerr << "warning: p = " << o_p
                          << " is not prime; the combinatorics is still defined\n";
            auto rec = cal::load_record(cache);
            auto junction =
                rec ? rec->conv.junction : dg::JunctionStyle::SigmaAll;
            dg::DgChain c = dg::DgChain::build(o_p, o_i, junction, o_cap);
            GradedDims d = c.homology(mode, static_cast<std::uint64_t>(o_p));
            std::ostringstream os;
            if (format == "json")
                os << dims_json(d);
            else
                os << d.to_csv();
            os << "# total " << d.total() << "\n";
            write_out(o_out, os.str());
            return 0;
        }

        if (calibrate->parsed()) {
            cal::Options opt;
            opt.ps = c_ps;
            opt.mode = mode == FieldMode::Rational ? FieldMode::Both : mode;
            opt.reference_csv = c_ref;
            for (auto& kv : c_over) {
                auto eq = kv.find('=');
                if (eq == std::string::npos)
                    throw VerifyError("--override expects key=value, got " + kv);
                opt.overrides[kv.substr(0, eq)] = kv.substr(eq + 1);
            }
            cal::Record rec = cal::calibrate(opt);
            cal::save_record(rec, cache);
            std::cout << "calibration written to " << cache << "\n" << rec.to_json();
            return 0;
        }

        cal::Record rec = need_record(cache);

        if (build->parsed()) {
            if (!is_prime(b_p))
                std::cerr << "warning: p = " << b_p
                          << " is not prime; the combinatorics is still defined\n";
            std::optional<long> kmax;
            if (b_kmax >= 0) kmax = b_kmax;
            schur::BlockAlgebra b(b_p, b_q, rec.conv, kmax);
            write_out(b_out, report::block_to_json(b, b_products) + "\n");
            return 0;
        }

        if (ext->parsed()) {
            if (jopt->count()) e_j = e_j_raw;
            schur::BlockAlgebra b(e_p, e_q, rec.conv);
            auto ct = report::cartan(b);
            report::Vertex from, to;
            if (e_from.find(',') != std::string::npos || e_q == 1) {
                from = parse_vertex(e_from, e_q);
                to = parse_vertex(e_to, e_q);
            } else {
                std::string path = e_ref.empty()
                                       ? report::default_reference_path(e_p, e_q)
                                       : e_ref;
                auto match = report::match_reference(b, report::load_reference_csv(path));
                if (!match.ok)
                    throw VerifyError("cannot resolve integer labels: " + match.diff);
                from = match.bijection.at(std::stoi(e_from));
                to = match.bijection.at(std::stoi(e_to));
            }
            std::cout << report::ext_dim(ct, from, to, e_k, e_j) << "\n";
            return 0;
        }

        if (quiver_cmd->parsed()) {
            schur::BlockAlgebra b(qv_p, qv_q, rec.conv);
            write_out(qv_out, report::quiver(b).to_dot());
            return 0;
        }

        if (cartan_cmd->parsed()) {
            schur::BlockAlgebra b(ct_p, ct_q, rec.conv);
            auto ct = report::cartan(b);
            write_out(ct_out, format == "json" ? ct.to_json() + "\n" : ct.to_csv());
            return 0;
        }

        if (poly->parsed()) {
            model::PolytopeModel m(pl_p, rec.conv);
            nlohmann::json j = nlohmann::json::array();
            for (const auto& w : m.enumerate_points(pl_imin, pl_imax))
                j.push_back({w.s, w.i, w.j, w.k, w.a, w.b, w.t});
            write_out(pl_out, j.dump(2) + "\n");
            return 0;
        }

        if (prods->parsed()) {
            model::PolytopeModel m(pr_p, rec.conv);
            std::vector<model::ProductEntry> entries;
            auto stats = model::truncated_product_table(m, pr_imin, pr_imax, &entries);
            std::ostringstream os;
            os << "w,w2,sign,v\n";
            for (auto& e : entries)
                os << e.w.str() << "," << e.v.str() << "," << e.sign << "," << e.result.str()
                   << "\n";
            os << "# pairs " << stats.pairs << ", nonzero " << stats.nonzero
               << ", truncation-killed " << stats.truncated_pairs << "\n";
            write_out(pr_out, os.str());
            return 0;
        }

        if (verify->parsed()) {
            if (v_p != 3 || v_q != 2)
                std::cerr << "note: the golden comparison is pinned at p=3, q=2\n";
            acceptance::Options opt;
            opt.record = rec;
            opt.reference_csv =
                v_ref.empty() ? report::default_reference_path(3, 2) : v_ref;
            opt.seed = seed;
            opt.mode = mode == FieldMode::Rational ? FieldMode::Both : mode;
            bool all = true;
            for (const auto& res : acceptance::run_all(opt)) {
                all = all && res.pass;
                std::cout << (res.pass ? "PASS" : "FAIL") << " " << res.id << ": "
                          << res.name << " [" << res.seconds << "s]"
                          << (res.detail.empty() ? "" : " -- " + res.detail) << "\n";
            }
            return all ? 0 : 1;
        }
    } catch (const VerifyError& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const InvariantError& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
