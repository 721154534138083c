#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "c2ext/report.hpp"
#include "c2ext/voa.hpp"

namespace {

using namespace c2ext;

constexpr int kExitOk = 0;
constexpr int kExitVerdict = 1;
constexpr int kExitInput = 2;

const auto g_start = std::chrono::steady_clock::now();

int default_D() {
    if (const char* env = std::getenv("C2EXT_DEFAULT_D")) return std::atoi(env);
    return 12;
}
int default_P() {
    if (const char* env = std::getenv("C2EXT_DEFAULT_P")) return std::atoi(env);
    return 6;
}

void emit(Json report, const std::string& out_path) {
    // Reports are byte-stable by default; timing is opt-in since it varies.
    if (const char* env = std::getenv("C2EXT_TIMING"); env && std::string(env) == "1") {
        report["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                                  std::chrono::steady_clock::now() - g_start)
                                  .count();
    }
    std::string text = report.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
        out << text;
    }
}

struct LoadedRing {
    RingDocument doc;
    RingPtr ring;
    std::vector<Polynomial> gens;
    int D;
    int P;
};

LoadedRing load(const std::string& path, int d_override, int p_override) {
    LoadedRing lr;
    lr.doc = load_ring_document(path);
    lr.ring = lr.doc.make_ring_spec();
    lr.gens = lr.doc.parse_generators(lr.ring);
    lr.D = d_override > 0 ? d_override : (lr.doc.D > 0 ? lr.doc.D : default_D());
    lr.P = p_override > 0 ? p_override : (lr.doc.P > 0 ? lr.doc.P : default_P());
    return lr;
}

int cmd_ring_check(const std::string& path, const std::string& out_path) {
    LoadedRing lr = load(path, 0, 0);
    GradedQuotient q = GradedQuotient::build(lr.ring, lr.gens, lr.D);
    Json report = report_header("ring check");
    report["ring"] = json_ring(*lr.ring);
    report["generators"] = json_generators(lr.gens);
    report["hilbert"] = json_hilbert(q);
    report["minimal_generators"] =
        json_minimal_generators(minimal_generator_count(lr.ring, lr.gens, lr.D));
    report["complete_intersection"] = json_ci(is_complete_intersection(q));
    emit(report, out_path);
    return kExitOk;
}

int cmd_resolve(const std::string& path, int p_arg, int d_arg, const std::string& out_path) {
    LoadedRing lr = load(path, d_arg, p_arg);
    auto q = std::make_shared<const GradedQuotient>(
        GradedQuotient::build(lr.ring, lr.gens, lr.D));
    FreeResolution res = minimal_resolution(q, lr.P, lr.D);
    VerifyReport vr = verify(res);
    Json report = report_header("resolve");
    report["truncation"] = {{"D", lr.D}, {"P", lr.P}};
    report["ring"] = json_ring(*lr.ring);
    report["generators"] = json_generators(lr.gens);
    report["hilbert"] = json_hilbert(*q);
    report["betti"] = json_betti(res);
    report["poincare"] = json_poincare(poincare_series(res));
    report["verify"] = json_verify(vr);
    emit(report, out_path);
    return vr.ok() ? kExitOk : kExitVerdict;
}

int cmd_ext(const std::string& path, int p_arg, int d_arg, const std::string& out_path) {
    LoadedRing lr = load(path, d_arg, p_arg);
    auto q = std::make_shared<const GradedQuotient>(
        GradedQuotient::build(lr.ring, lr.gens, lr.D));
    auto res = std::make_shared<const FreeResolution>(minimal_resolution(q, lr.P, lr.D));
    VerifyReport vr = verify(*res);
    ExtAlgebra ext = ExtAlgebra::compute(res, lr.P);
    Json report = report_header("ext");
    report["truncation"] = {{"D", lr.D}, {"P", lr.P}};
    report["ring"] = json_ring(*lr.ring);
    report["generators"] = json_generators(lr.gens);
    report["betti"] = json_betti(*res);
    report["verify"] = json_verify(vr);
    report["ext"] = json_ext_table(ext);
    report["commutative_quotient"] = json_commutative_quotient(commutative_quotient(ext, lr.P));
    Json violations = Json::array();
    for (const CommutatorViolation& v : graded_commutator_report(ext))
        violations.push_back({{"left", v.left}, {"right", v.right}});
    report["graded_commutator_violations"] = violations;
    emit(report, out_path);
    return vr.ok() ? kExitOk : kExitVerdict;
}

int cmd_tate(const std::string& path, int p_arg, int d_arg, const std::string& out_path) {
    LoadedRing lr = load(path, d_arg, p_arg);
    auto q = std::make_shared<const GradedQuotient>(
        GradedQuotient::build(lr.ring, lr.gens, lr.D));
    Json report = report_header("tate");
    report["truncation"] = {{"D", lr.D}, {"P", lr.P}};
    report["ring"] = json_ring(*lr.ring);
    report["generators"] = json_generators(lr.gens);
    CiReport ci = is_complete_intersection(*q);
    report["complete_intersection"] = json_ci(ci);
    if (ci.verdict != CiVerdict::YesCertifiedToD) {
        report["error"] = "quotient is not CI-certified; no Tate data";
        emit(report, out_path);
        return kExitVerdict;
    }
    TateComplex t = TateComplex::build(q);
    Json ranks = Json::array();
    for (int m = 0; m <= lr.P; ++m) ranks.push_back(t.rank(m));
    report["tate_ranks"] = ranks;
    report["tate_verify"] = json_tate_verify(verify_tate(t, lr.D));
    CIPresentation pres = ci_ext_presentation(*q, lr.P);
    report["presentation"] = json_ci_presentation(pres);
    auto res = std::make_shared<const FreeResolution>(minimal_resolution(q, lr.P, lr.D));
    Json engine_dims = Json::array();
    bool dims_match = true;
    for (int i = 0; i <= lr.P; ++i) {
        engine_dims.push_back(res->betti_total(i));
        if (res->betti_total(i) != pres.dims[static_cast<std::size_t>(i)]) dims_match = false;
    }
    report["engine_ext_dims"] = engine_dims;
    report["engine_matches_presentation"] = dims_match;
    emit(report, out_path);
    bool ok = dims_match && report["tate_verify"]["ok"].get<bool>();
    return ok ? kExitOk : kExitVerdict;
}

int cmd_voa_affine(const std::string& type_str, int rank, int level, int d_arg, int p_arg,
                   const std::string& out_path, const std::string& ring_out) {
    LieType type = lie_type_from_string(type_str);
    C2Presentation pres = affine_c2(type, rank, level);
    RootSystem rs = RootSystem::create(type, rank);
    int D = d_arg > 0 ? d_arg : std::max(default_D(), level + 2);
    int P = p_arg > 0 ? p_arg : default_P();
    Json report = report_header("voa affine");
    report["provenance"] = pres.provenance;
    report["ring"] = json_ring(*pres.ring);
    report["generators"] = json_generators(pres.generators);
    report["n_k"] = to_string(weyl_nk_value(rs, level));
    report["nk_degree"] = nk_degree(rs);
    report["ring_document"] = serialize_ring_document(to_ring_document(pres, D, P));
    if (!ring_out.empty()) {
        std::ofstream out(ring_out);
        if (!out) throw std::runtime_error("cannot write '" + ring_out + "'");
        out << serialize_ring_document(to_ring_document(pres, D, P));
    }
    emit(report, out_path);
    return kExitOk;
}

int cmd_voa_virasoro(int p, int q, bool generic, int d_arg, int p_arg,
                     const std::string& out_path, const std::string& ring_out) {
    C2Presentation pres = generic ? virasoro_c2_generic() : virasoro_c2_minimal(p, q);
    int D = d_arg > 0 ? d_arg : default_D();
    int P = p_arg > 0 ? p_arg : default_P();
    Json report = report_header("voa virasoro");
    report["provenance"] = pres.provenance;
    report["ring"] = json_ring(*pres.ring);
    report["generators"] = json_generators(pres.generators);
    if (!generic) report["central_charge"] = to_string(cpq(p, q));
    report["ring_document"] = serialize_ring_document(to_ring_document(pres, D, P));
    if (!ring_out.empty()) {
        std::ofstream out(ring_out);
        if (!out) throw std::runtime_error("cannot write '" + ring_out + "'");
        out << serialize_ring_document(to_ring_document(pres, D, P));
    }
    emit(report, out_path);
    return kExitOk;
}

int cmd_nk(const std::string& type_str, int rank, int level, bool symbolic,
           const std::string& out_path) {
    RootSystem rs = RootSystem::create(lie_type_from_string(type_str), rank);
    Json report = report_header("nk");
    report["type"] = type_str + std::to_string(rank);
    report["degree"] = nk_degree(rs);
    report["dual_coxeter"] = rs.dual_coxeter();
    report["dim_g"] = rs.dimension();
    if (symbolic) {
        Json coeffs = Json::array();
        for (const Rational& c : weyl_nk_polynomial(rs)) coeffs.push_back(to_string(c));
        report["polynomial_in_k"] = coeffs;
    }
    if (level >= 0) report["n_k"] = to_string(weyl_nk_value(rs, level));
    emit(report, out_path);
    return kExitOk;
}

int cmd_compose_tensor(const std::string& f1, const std::string& f2,
                       const std::string& out_path, const std::string& ring_out) {
    RingDocument d1 = load_ring_document(f1);
    RingDocument d2 = load_ring_document(f2);
    C2Presentation a{d1.make_ring_spec(), {}, "file:" + f1};
    a.generators = d1.parse_generators(a.ring);
    C2Presentation b{d2.make_ring_spec(), {}, "file:" + f2};
    b.generators = d2.parse_generators(b.ring);
    C2Presentation merged = tensor_c2(a, b);
    int D = std::max(d1.D, d2.D);
    int P = std::max(d1.P, d2.P);
    Json report = report_header("compose tensor");
    report["provenance"] = merged.provenance;
    report["ring"] = json_ring(*merged.ring);
    report["generators"] = json_generators(merged.generators);
    std::string doc = serialize_ring_document(to_ring_document(merged, D, P));
    report["ring_document"] = doc;
    if (!ring_out.empty()) {
        std::ofstream out(ring_out);
        if (!out) throw std::runtime_error("cannot write '" + ring_out + "'");
        out << doc;
    }
    emit(report, out_path);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact C2-algebra resolution and Ext computations"};
    app.require_subcommand(1);

    std::string out_path;
    app.add_option("--out", out_path, "write the JSON report to a file instead of stdout");

    // ring check <file>
    auto* ring = app.add_subcommand("ring", "ring document operations");
    ring->require_subcommand(1);
    auto* ring_check = ring->add_subcommand("check", "parse and analyze a ring document");
    std::string ring_file;
    ring_check->add_option("file", ring_file, "ring document")->required();

    // resolve <file> [--p P --d D]
    auto* resolve_cmd = app.add_subcommand("resolve", "minimal free resolution of the residue field");
    std::string resolve_file;
    int opt_p = 0, opt_d = 0;
    resolve_cmd->add_option("file", resolve_file, "ring document")->required();
    resolve_cmd->add_option("--p", opt_p, "homological bound");
    resolve_cmd->add_option("--d", opt_d, "internal degree bound");

    // ext <file>
    auto* ext_cmd = app.add_subcommand("ext", "Yoneda Ext algebra with structure constants");
    std::string ext_file;
    int ext_p = 0, ext_d = 0;
    ext_cmd->add_option("file", ext_file, "ring document")->required();
    ext_cmd->add_option("--p", ext_p, "homological bound");
    ext_cmd->add_option("--d", ext_d, "internal degree bound");

    // tate <file>
    auto* tate_cmd = app.add_subcommand("tate", "Tate complex and CI Ext presentation");
    std::string tate_file;
    int tate_p = 0, tate_d = 0;
    tate_cmd->add_option("file", tate_file, "ring document")->required();
    tate_cmd->add_option("--p", tate_p, "homological bound");
    tate_cmd->add_option("--d", tate_d, "internal degree bound");

    // voa affine | virasoro
    auto* voa_cmd = app.add_subcommand("voa", "C2-algebra builders");
    voa_cmd->require_subcommand(1);
    auto* affine = voa_cmd->add_subcommand("affine", "simple affine VOA at integer level");
    std::string affine_type;
    int affine_rank = 0, affine_level = 0, affine_d = 0, affine_p = 0;
    std::string affine_ring_out;
    affine->add_option("--type", affine_type, "Lie type (A, B, C, G)")->required();
    affine->add_option("--rank", affine_rank, "rank")->required();
    affine->add_option("--level", affine_level, "nonnegative integer level")->required();
    affine->add_option("--d", affine_d, "truncation degree for the emitted document");
    affine->add_option("--p", affine_p, "homological bound for the emitted document");
    affine->add_option("--ring-out", affine_ring_out, "write the ring document here");

    auto* virasoro = voa_cmd->add_subcommand("virasoro", "simple Virasoro VOA");
    int vir_p = 0, vir_q = 0, vir_d = 0, vir_pp = 0;
    bool vir_generic = false;
    std::string vir_ring_out;
    virasoro->add_option("--p", vir_p, "minimal model p");
    virasoro->add_option("--q", vir_q, "minimal model q");
    virasoro->add_flag("--generic", vir_generic, "generic central charge");
    virasoro->add_option("--d", vir_d, "truncation degree for the emitted document");
    virasoro->add_option("--hp", vir_pp, "homological bound for the emitted document");
    virasoro->add_option("--ring-out", vir_ring_out, "write the ring document here");

    // nk
    auto* nk_cmd = app.add_subcommand("nk", "Weyl minimal-generator count N_k");
    std::string nk_type;
    int nk_rank = 0, nk_level = -1;
    bool nk_symbolic = false;
    nk_cmd->add_option("--type", nk_type, "Lie type")->required();
    nk_cmd->add_option("--rank", nk_rank, "rank")->required();
    nk_cmd->add_option("--level", nk_level, "evaluate at this level");
    nk_cmd->add_flag("--symbolic", nk_symbolic, "emit the polynomial in k");

    // compose tensor <f1> <f2>
    auto* compose = app.add_subcommand("compose", "compose presentations");
    compose->require_subcommand(1);
    auto* tensor = compose->add_subcommand("tensor", "disjoint-variable tensor product");
    std::string tensor_f1, tensor_f2, tensor_ring_out;
    tensor->add_option("file1", tensor_f1, "first ring document")->required();
    tensor->add_option("file2", tensor_f2, "second ring document")->required();
    tensor->add_option("--ring-out", tensor_ring_out, "write the merged document here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (ring_check->parsed()) return cmd_ring_check(ring_file, out_path);
        if (resolve_cmd->parsed()) return cmd_resolve(resolve_file, opt_p, opt_d, out_path);
        if (ext_cmd->parsed()) return cmd_ext(ext_file, ext_p, ext_d, out_path);
        if (tate_cmd->parsed()) return cmd_tate(tate_file, tate_p, tate_d, out_path);
        if (affine->parsed())
            return cmd_voa_affine(affine_type, affine_rank, affine_level, affine_d, affine_p,
                                  out_path, affine_ring_out);
        if (virasoro->parsed()) {
            if (!vir_generic && (vir_p == 0 || vir_q == 0))
                throw std::invalid_argument("virasoro: need --p and --q, or --generic");
            return cmd_voa_virasoro(vir_p, vir_q, vir_generic, vir_d, vir_pp, out_path,
                                    vir_ring_out);
        }
        if (nk_cmd->parsed()) return cmd_nk(nk_type, nk_rank, nk_level, nk_symbolic, out_path);
        if (tensor->parsed()) return cmd_compose_tensor(tensor_f1, tensor_f2, out_path,
                                                        tensor_ring_out);
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const RingDocError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
