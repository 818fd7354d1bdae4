// Command-line front end: object ingestion, corpus generation, batch
// verification, reporting.  Verdicts are data; exit codes are reserved for
// operational failure.

#include "sostar/sostar.hpp"
#include "sostar/json_io.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <functional>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace sostar;
using nlohmann::json;

namespace {

int log_level() {
    const char* env = std::getenv("SOSTAR_LOG");
    if (!env) return 0;
    std::string v(env);
    if (v == "debug") return 2;
    if (v == "info") return 1;
    return 0;
}

void log_info(const std::string& msg) {
    if (log_level() >= 1) std::cerr << "[sostar] " << msg << "\n";
}

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open input file '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& data) {
    if (path.empty() || path == "-") {
        std::cout << data;
        if (data.empty() || data.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file '" + path + "'");
    f << data;
    if (data.empty() || data.back() != '\n') f << "\n";
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

json report_header(const std::string& command, const std::string& input_bytes,
                   std::uint64_t seed) {
    return json{{"version", kVersion},
                {"command", command},
                {"seed", seed},
                {"input_digest", fnv1a_hex(input_bytes)}};
}

json verdict_with_extras(const SOStarHiggsObject& H) {
    Verdict semi = check_semistable(H);
    json out = to_json(semi);
    out["toledo"] = toledo(H);
    out["milnor_wood"] = to_json(milnor_wood(H));
    if (semi.status != Status::Unstable) {
        PolystableResult ps = check_polystable(H);
        if (ps.outcome != PolystableResult::Outcome::NotPolystable) {
            json types = json::array();
            for (const auto& t : classify_summands(H)) {
                json indices = json::array();
                for (std::size_t v : t.indices) indices.push_back(v + 1);
                types.push_back(json{{"indices", indices},
                                     {"kind", summand_kind_name(t.kind)},
                                     {"structural", t.structural},
                                     {"detail", t.detail}});
            }
            out["summand_types"] = types;
            out["polystable"] = true;
        } else {
            out["polystable"] = false;
            out["polystable_failure"] = ps.failure->reason;
        }
    }
    return out;
}

json minima_report(const SOStarHiggsObject& H) {
    json out;
    auto dec = detect_hodge(H);
    out["is_hodge"] = static_cast<bool>(dec);
    if (dec) {
        json weights = json::array();
        for (const auto& w : dec->weights) weights.push_back(rat_to_string(w));
        out["weights"] = weights;
        MinimumReport rep = minimum_check(H, *dec);
        json checks = json::array();
        for (const auto& c : rep.checks)
            checks.push_back(json{{"k", rat_to_string(c.k)},
                                  {"rank_source", c.rank_source},
                                  {"rank_target", c.rank_target},
                                  {"passed", c.passed},
                                  {"note", c.note}});
        out["per_k_check"] = checks;
        out["minimum_check"] = rep.is_minimum;
        if (rep.obstruction) out["obstruction"] = *rep.obstruction;
    }
    Verdict semi = check_semistable(H);
    if (semi.status != Status::Unstable &&
        check_polystable(H).outcome != PolystableResult::Outcome::NotPolystable) {
        out["classify"] =
            classify_minimum(H) == MinimumVerdict::Minimum ? "minimum" : "not-minimum";
        HitchinFloor f = hitchin_floor(H);
        out["floor"] = json{{"value", f.value},
                            {"certificate", f.certificate},
                            {"chern_weil", f.chern_weil}};
    } else {
        out["classify"] = "not-polystable";
    }
    return out;
}

// ---------------------------------------------------------------------------
// Batch verification over a JSON-lines corpus.
// ---------------------------------------------------------------------------

struct CheckOutcome {
    std::string name;
    bool applicable = false;
    bool ok = true;
    std::string detail;
};

std::vector<CheckOutcome> run_checks(const SOStarHiggsObject& H,
                                     const std::vector<std::string>& names) {
    std::vector<CheckOutcome> out;
    Verdict semi = check_semistable(H);
    for (const std::string& name : names) {
        CheckOutcome c;
        c.name = name;
        if (name == "validate") {
            c.applicable = true;
            auto issues = validate(H);
            c.ok = issues.empty();
            if (!c.ok) c.detail = issues.front().message;
        } else if (name == "semistable") {
            c.applicable = true;
            c.ok = true;
            c.detail = status_name(semi.status);
        } else if (name == "oracle") {
            c.applicable = H.rank() <= 4;
            if (c.applicable) {
                Status general = check_general_criterion(H, H.rank()).status;
                c.ok = general == semi.status;
                if (!c.ok)
                    c.detail = std::string("two-step ") + status_name(semi.status) +
                               " vs general " + status_name(general);
            }
        } else if (name == "duality") {
            c.applicable = true;
            SOStarHiggsObject D = dualize(H);
            c.ok = check_semistable(D).status == semi.status && toledo(D) == -toledo(H);
            if (!c.ok) c.detail = "dual verdict or Toledo mismatch";
        } else if (name == "milnor-wood") {
            c.applicable = semi.status != Status::Unstable;
            if (c.applicable) {
                MilnorWoodReport r = milnor_wood(H);
                c.ok = r.within_rank_bounds && r.within_cap;
                if (!c.ok) c.detail = "bound violated";
            }
        } else if (name == "cayley") {
            long n = static_cast<long>(H.rank());
            c.applicable = n % 2 == 0 && toledo(H) == n * (H.ctx.genus - 1) &&
                           gamma_iso_status(H) == SkewIsoStatus::Iso && H.ctx.has_k_half;
            if (c.applicable) {
                UStarPair P = cayley(H);
                SOStarHiggsObject back = cayley_inverse(P);
                bool roundtrip = back.V == H.V && back.beta_support == H.beta_support &&
                                 back.gamma_support == H.gamma_support;
                bool verdicts = ustar_stability(P).status == semi.status;
                c.ok = roundtrip && verdicts;
                if (!c.ok) c.detail = roundtrip ? "verdict mismatch" : "roundtrip mismatch";
            }
        } else if (name == "rigidity") {
            long n = static_cast<long>(H.rank());
            c.applicable = n % 2 == 1 && n >= 3 &&
                           toledo(H) == (n / 2) * (2 * H.ctx.genus - 2) &&
                           semi.status != Status::Unstable &&
                           check_polystable(H).outcome !=
                               PolystableResult::Outcome::NotPolystable;
            if (c.applicable) {
                try {
                    RigidityDecomposition R = rigidity_decompose(H);
                    c.ok = R.ker_degree == 0 && R.torsion_degree == 0 &&
                           semi.status != Status::Stable;
                    if (!c.ok) c.detail = "bookkeeping mismatch";
                } catch (const std::exception& e) {
                    c.ok = false;
                    c.detail = e.what();
                }
            }
        } else if (name == "minima") {
            auto dec = detect_hodge(H);
            c.applicable = static_cast<bool>(dec) && semi.status != Status::Unstable &&
                           check_polystable(H).outcome !=
                               PolystableResult::Outcome::NotPolystable;
            if (c.applicable) {
                bool via_checks = minimum_check(H, *dec).is_minimum;
                bool via_class = classify_minimum(H) == MinimumVerdict::Minimum;
                c.ok = via_checks == via_class;
                if (!c.ok) c.detail = "per-weight checks disagree with the classification";
            }
        } else if (name == "dims") {
            c.applicable = true;
            c.ok = complex_euler(H) ==
                   expected_dimension(static_cast<long>(H.rank()), H.ctx.genus);
            if (!c.ok) c.detail = "Euler characteristic mismatch";
        } else {
            throw std::runtime_error("unknown check '" + name + "'");
        }
        out.push_back(std::move(c));
    }
    return out;
}

json batch_verify(const std::vector<SOStarHiggsObject>& objects,
                  const std::vector<std::string>& checks, unsigned jobs) {
    std::vector<json> results(objects.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= objects.size()) return;
            json per = json::array();
            for (const auto& c : run_checks(objects[i], checks))
                per.push_back(json{{"name", c.name},
                                   {"applicable", c.applicable},
                                   {"ok", c.ok},
                                   {"detail", c.detail}});
            results[i] = json{{"index", i},
                              {"rank", objects[i].rank()},
                              {"toledo", toledo(objects[i])},
                              {"checks", per}};
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    json aggregate = json::object();
    for (const auto& name : checks)
        aggregate[name] = json{{"applicable", 0}, {"passed", 0}, {"failed", 0}};
    for (const auto& r : results)
        for (const auto& c : r.at("checks")) {
            const std::string name = c.at("name");
            if (!c.at("applicable").get<bool>()) continue;
            aggregate[name]["applicable"] = aggregate[name]["applicable"].get<int>() + 1;
            std::string key = c.at("ok").get<bool>() ? "passed" : "failed";
            aggregate[name][key] = aggregate[name][key].get<int>() + 1;
        }
    return json{{"results", results}, {"aggregate", aggregate}};
}

std::string batch_csv(const json& report) {
    std::ostringstream os;
    os << "index,rank,toledo";
    bool header_done = false;
    for (const auto& r : report.at("results")) {
        if (!header_done) {
            for (const auto& c : r.at("checks")) os << "," << c.at("name").get<std::string>();
            os << "\n";
            header_done = true;
        }
        os << r.at("index") << "," << r.at("rank") << "," << r.at("toledo");
        for (const auto& c : r.at("checks")) {
            os << ",";
            if (!c.at("applicable").get<bool>()) os << "n/a";
            else os << (c.at("ok").get<bool>() ? "ok" : "FAIL");
        }
        os << "\n";
    }
    return os.str();
}

std::vector<SOStarHiggsObject> parse_stream(const std::string& bytes) {
    std::vector<SOStarHiggsObject> out;
    std::istringstream is(bytes);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            out.push_back(parse_object(json::parse(line)));
        } catch (const std::exception& e) {
            throw std::runtime_error("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

json lie_verify(const json& input) {
    // accepts {"n": ..., "matrices": [...]} or a bare list of matrices, with
    // the rank inferred from the first matrix
    json mats_holder;
    const json* mats_ptr = nullptr;
    std::size_t n = 0;
    if (input.is_array()) {
        mats_holder = input;
        mats_ptr = &mats_holder;
        if (input.empty() || !input.at(0).is_array() || input.at(0).size() % 2 != 0)
            throw parse_error("/0", "cannot infer the rank from the first matrix");
        n = input.at(0).size() / 2;
    } else {
        if (!input.contains("n")) throw parse_error("/n", "missing rank");
        n = input.at("n").get<std::size_t>();
        mats_ptr = &input.at("matrices");
    }
    GroupContext ctx(n);
    json reports = json::array();
    const json& mats = *mats_ptr;
    for (std::size_t k = 0; k < mats.size(); ++k) {
        ExactMatrix M = matrix_from_json(mats.at(k), "/matrices/" + std::to_string(k));
        json rep{{"index", k}};
        if (M.rows() != 2 * ctx.n || M.cols() != 2 * ctx.n) {
            rep["error"] = "expected a 2n x 2n matrix";
            reports.push_back(rep);
            continue;
        }
        bool grp = is_group_element(ctx, M);
        bool alg = is_algebra_element(ctx, M);
        rep["group_element"] = grp;
        rep["algebra_element"] = alg;
        if (grp) {
            ExactMatrix A = cayley_conjugate(ctx, M);
            rep["signature_unitary"] =
                (A.conjugate().transpose() * ctx.Inn * A == ctx.Inn);
            rep["signature_orthogonal"] =
                (A.transpose() * ctx.Inn * ctx.J * A == ctx.Inn * ctx.J);
        }
        if (alg) {
            CartanSplit s = cartan_split(ctx, M);
            rep["compact_part_zero"] = s.h_part.is_zero();
            rep["noncompact_part_zero"] = s.m_part.is_zero();
        }
        reports.push_back(rep);
    }
    return json{{"n", ctx.n}, {"reports", reports}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact split-model toolkit for skew Higgs data on a curve"};
    app.require_subcommand(1);

    std::string input_path, output_path, format = "json";
    std::uint64_t seed = 0;
    unsigned jobs = 1;
    app.add_option("--input", input_path, "input file (default: stdin)");
    app.add_option("--output", output_path, "output file (default: stdout)");
    app.add_option("--seed", seed, "seed for generation");
    app.add_option("--jobs", jobs, "worker threads for batch runs");
    app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    auto* cmd_check = app.add_subcommand("check", "stability verdict for one object");
    auto* cmd_mw = app.add_subcommand("mw", "degree bound report for one object");
    auto* cmd_cayley = app.add_subcommand("cayley", "transform a maximal even-rank object");
    auto* cmd_rigidity = app.add_subcommand("rigidity", "decompose a maximal odd-rank object");
    auto* cmd_minima = app.add_subcommand("minima", "fixed-point and minimum analysis");
    auto* cmd_dims = app.add_subcommand("dims", "dimension formulas");
    long dims_n = 0, dims_m = 0, dims_g = 0;
    cmd_dims->add_option("--n", dims_n, "rank for the expected dimension");
    cmd_dims->add_option("--m", dims_m, "half-rank for the rigid dimension");
    cmd_dims->add_option("--g", dims_g, "genus");
    auto* cmd_lie = app.add_subcommand("lie", "matrix identity reports");
    cmd_lie->add_subcommand("verify", "membership and identity checks on a matrix list");
    auto* cmd_lowrank = app.add_subcommand("lowrank", "rank 1..3 special features");
    auto* lr_so2 = cmd_lowrank->add_subcommand("so2", "rank-1 verdict");
    auto* lr_so4 = cmd_lowrank->add_subcommand("so4-split", "rank-2 factorization");
    auto* lr_so6 = cmd_lowrank->add_subcommand("so6-u13", "rank-3 interior-product image");
    auto* lr_ids = cmd_lowrank->add_subcommand("identities", "exact 3x3 vector identities");
    auto* lr_lifts = cmd_lowrank->add_subcommand("lifts", "lifting criteria table");
    std::string lift_pair = "all";
    std::string lift_tau = "0";
    lr_lifts->add_option("--pair", lift_pair, "pu13-so6 | pu13-su13 | so6-su13 | all");
    lr_lifts->add_option("--tau", lift_tau, "rational Toledo invariant p/q");
    auto* cmd_corpus = app.add_subcommand("corpus", "seeded object stream");
    std::size_t corpus_count = 100, corpus_nmax = 4;
    std::string corpus_gset = "2,3";
    cmd_corpus->add_option("--count", corpus_count, "number of objects");
    cmd_corpus->add_option("--n-max", corpus_nmax, "maximum rank");
    cmd_corpus->add_option("--g", corpus_gset, "comma-separated genus set");
    auto* cmd_batch = app.add_subcommand("batch", "run checks over a JSON-lines stream");
    std::string checks_arg = "validate,semistable,duality,milnor-wood,dims";
    cmd_batch->add_option("--checks", checks_arg, "comma-separated check names");

    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
        for (CLI::App* sub : a->get_subcommands({})) {
            sub->fallthrough();
            enable_fallthrough(sub);
        }
    };
    enable_fallthrough(&app);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_dims->parsed() && input_path.empty()) {
            json out;
            if (dims_g < 2) throw std::runtime_error("dims: need --g >= 2");
            if (dims_n >= 1) {
                out["n"] = dims_n;
                out["expected_dimension"] = expected_dimension(dims_n, dims_g);
            }
            if (dims_m >= 1) {
                out["m"] = dims_m;
                out["rigid_dimension"] = rigid_dimension(dims_m, dims_g);
            }
            out["g"] = dims_g;
            write_output(output_path, out.dump(2));
            return 0;
        }
        if (cmd_lowrank->parsed() && lr_lifts->parsed()) {
            Rational tau = rat_from_string(lift_tau);
            json out;
            if (lift_pair == "pu13-so6" || lift_pair == "all")
                out["pu13_to_so6"] = lift_criteria(LiftPair::PU13_to_SOstar6, tau);
            if (lift_pair == "pu13-su13" || lift_pair == "all")
                out["pu13_to_su13"] = lift_criteria(LiftPair::PU13_to_SU13, tau);
            if (lift_pair == "so6-su13" || lift_pair == "all")
                out["so6_to_su13"] = lift_criteria(LiftPair::SOstar6_to_SU13, tau);
            out["tau"] = rat_to_string(tau);
            write_output(output_path, out.dump(2));
            return 0;
        }

        if (cmd_corpus->parsed()) {
            CorpusParams params;
            params.count = corpus_count;
            params.n_max = corpus_nmax;
            params.g_set.clear();
            std::stringstream gs(corpus_gset);
            std::string tok;
            while (std::getline(gs, tok, ',')) params.g_set.push_back(std::stol(tok));
            if (params.g_set.empty()) params.g_set = {2, 3};
            log_info("generating " + std::to_string(params.count) + " objects");
            std::ostringstream os;
            for (std::uint64_t i = 0; i < params.count; ++i)
                os << to_json(corpus_object(seed, i, params)).dump() << "\n";
            write_output(output_path, os.str());
            return 0;
        }

        std::string bytes = read_input(input_path);
        json header = report_header(app.get_subcommands().front()->get_name(), bytes, seed);

        if (cmd_batch->parsed()) {
            auto objects = parse_stream(bytes);
            std::vector<std::string> checks;
            std::stringstream cs(checks_arg);
            std::string tok;
            while (std::getline(cs, tok, ',')) checks.push_back(tok);
            log_info("batch over " + std::to_string(objects.size()) + " objects, jobs=" +
                     std::to_string(jobs));
            json report = batch_verify(objects, checks, jobs);
            report.update(header);
            if (format == "csv") write_output(output_path, batch_csv(report));
            else write_output(output_path, report.dump(2));
            return 0;
        }

        json input = json::parse(bytes);

        if (cmd_lie->parsed()) {
            json out = lie_verify(input);
            out.update(header);
            write_output(output_path, out.dump(2));
            return 0;
        }

        if (cmd_lowrank->parsed() && lr_ids->parsed()) {
            ExactMatrix beta = matrix_from_json(input.at("beta"), "/beta");
            ExactMatrix gamma = matrix_from_json(input.at("gamma"), "/gamma");
            ExactMatrix metric = input.contains("metric")
                                     ? matrix_from_json(input.at("metric"), "/metric")
                                     : ExactMatrix::identity(3);
            json out{{"identities_hold", u13_identities_check(beta, gamma, metric)}};
            out.update(header);
            write_output(output_path, out.dump(2));
            return 0;
        }

        // everything below ingests one Higgs object
        SOStarHiggsObject H = parse_object(input);
        auto issues = validate(H);
        if (!issues.empty()) {
            json diag = json::array();
            for (const auto& i : issues)
                diag.push_back(json{{"field", i.field},
                                    {"i", i.entry.first + 1},
                                    {"j", i.entry.second + 1},
                                    {"message", i.message}});
            json out{{"error", "object fails validation"}, {"issues", diag}};
            out.update(header);
            write_output(output_path, out.dump(2));
            return 0;
        }

        json out;
        if (cmd_check->parsed()) {
            out = verdict_with_extras(H);
        } else if (cmd_mw->parsed()) {
            out = to_json(milnor_wood(H));
        } else if (cmd_cayley->parsed()) {
            UStarPair P = cayley(H);
            json omega = json::array();
            for (const auto& [a, b] : P.omega_support)
                omega.push_back(json{{"i", a + 1}, {"j", b + 1}});
            json psi = json::array();
            for (const auto& [a, b] : P.psi_support)
                psi.push_back(json{{"src", a + 1}, {"dst", b + 1}});
            json w = json::array();
            for (const auto& L : P.W.summands) w.push_back(to_json(L));
            out = json{{"W", w},
                       {"W_degree", P.W.degree(P.ctx)},
                       {"omega", omega},
                       {"psi", psi},
                       {"pair_verdict", to_json(ustar_stability(P))},
                       {"pair_polystable",
                        ustar_polystable(SymplHiggsObject{P.ctx, P.W, P.omega_support,
                                                          P.psi_support})},
                       {"object_verdict", to_json(check_semistable(H))}};
            SOStarHiggsObject back = cayley_inverse(P);
            out["roundtrip_identity"] = back.V == H.V &&
                                        back.beta_support == H.beta_support &&
                                        back.gamma_support == H.gamma_support;
        } else if (cmd_rigidity->parsed()) {
            RigidityDecomposition R = rigidity_decompose(H);
            out = json{{"kernel_line", to_json(R.kernel_line)},
                       {"kernel_index", R.kernel_index + 1},
                       {"kernel_degree", R.ker_degree},
                       {"torsion_degree", R.torsion_degree},
                       {"rank_gamma", R.rank_gamma},
                       {"w_gamma_degree", R.w_gamma_degree},
                       {"second_fundamental_form", "forced zero"},
                       {"core", to_json(R.core)},
                       {"core_toledo", toledo(R.core)}};
        } else if (cmd_minima->parsed()) {
            out = minima_report(H);
        } else if (cmd_dims->parsed()) {
            long n = static_cast<long>(H.rank());
            out = json{{"n", n},
                       {"g", H.ctx.genus},
                       {"expected_dimension", expected_dimension(n, H.ctx.genus)},
                       {"complex_euler", complex_euler(H)}};
            if (n % 2 == 1 && n >= 3)
                out["rigid_dimension"] = rigid_dimension(n / 2, H.ctx.genus);
        } else if (cmd_lowrank->parsed()) {
            if (lr_so2->parsed()) {
                if (H.rank() != 1) throw std::runtime_error("so2 expects a rank-1 object");
                out = to_json(so2_check(H.ctx, H.V.summands[0]));
            } else if (lr_so4->parsed()) {
                So4Split s = so4_split(H);
                json u = json::array();
                for (const auto& L : s.U.summands) u.push_back(to_json(L));
                out = json{{"U", u},
                           {"L", to_json(s.triple.L)},
                           {"beta_t", s.triple.beta_t},
                           {"gamma_t", s.triple.gamma_t},
                           {"shortcut_verdict", to_json(so4_stability(H))}};
            } else if (lr_so6->parsed()) {
                U13Object u = so6_to_u13(H);
                json bt = json::array(), gt = json::array();
                for (bool b : u.beta_t) bt.push_back(b);
                for (bool b : u.gamma_t) gt.push_back(b);
                out = json{{"L", to_json(u.L)},
                           {"beta_t", bt},
                           {"gamma_t", gt},
                           {"pair_verdict", to_json(u13_check(H))},
                           {"object_verdict", to_json(check_semistable(H))}};
                if (u.beta_vec) out["beta_vec"] = to_json(*u.beta_vec);
                if (u.gamma_vec) out["gamma_vec"] = to_json(*u.gamma_vec);
            } else {
                throw std::runtime_error("lowrank: choose a sub-verb");
            }
        } else {
            throw std::runtime_error("no subcommand matched");
        }
        out.update(header);
        write_output(output_path, out.dump(2));
        return 0;
    } catch (const parse_error& e) {
        json err{{"error", e.what()}, {"pointer", e.pointer}};
        std::cerr << err.dump(2) << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", e.what()}}.dump(2) << "\n";
        return 1;
    }
}
