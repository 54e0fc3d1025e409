#include <fstream>
#include <iostream>
#include <set>

#include "CLI11.hpp"
#include "json.hpp"

#include "sawlab/enumeration.hpp"
#include "sawlab/madras.hpp"
#include "sawlab/snake.hpp"
#include "sawlab/surgery.hpp"
#include "sawlab/verify.hpp"

using namespace sawlab;

namespace {

nlohmann::json join_record_json(const JoinRecord& rec) {
    nlohmann::json j;
    j["left"] = rec.left.direction_string();
    j["right"] = rec.right.direction_string();
    j["shift"] = {rec.shift.x, rec.shift.y};
    j["junction"] = rec.junction.str();
    j["output"] = rec.output.direction_string();
    return j;
}

Polygon read_polygon_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::io_error, "cannot open " + path);
    std::string dirs;
    in >> dirs;
    return Polygon::from_direction_string(dirs);
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) fail(errc::io_error, "cannot open " + path + " for writing");
    out << text;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"sawlab: exact enumeration and polygon surgery on the square lattice"};
    app.require_subcommand(1);

    uint64_t budget = 0;
    app.add_option("--budget", budget, "node budget for enumerations (default: SAWLAB_BUDGET)");

    // enumerate
    auto* cmd_enum = app.add_subcommand("enumerate", "enumerate a class and write an ensemble file");
    std::string cls_token = "walk_rooted";
    int enum_n = 4, enum_m = 0;
    bool enum_full = false;
    std::string out_path;
    cmd_enum->add_option("--class", cls_token, "walk_rooted|walk_ne0|polygon|first|first_nm(M)")
        ->required();
    cmd_enum->add_option("--n", enum_n, "object length")->required();
    cmd_enum->add_option("--m", enum_m, "completion length for first_nm");
    cmd_enum->add_flag("--full", enum_full, "store members, not just the count");
    cmd_enum->add_option("--out", out_path, "ensemble file path")->required();

    // counts
    auto* cmd_counts = app.add_subcommand("counts", "walk/polygon/closing counts as CSV");
    int counts_max_n = 10;
    std::string counts_csv;
    cmd_counts->add_option("--max-n", counts_max_n, "largest length")->required();
    cmd_counts->add_option("--csv", counts_csv, "output CSV path")->required();

    // closing
    auto* cmd_closing = app.add_subcommand("closing", "closing count and probability at one length");
    int closing_n = 5;
    cmd_closing->add_option("--n", closing_n, "walk length")->required();

    // join
    auto* cmd_join = app.add_subcommand("join", "Madras join two polygons");
    std::string left_path, right_path;
    bool scan_shifts = false;
    cmd_join->add_option("--left", left_path, "file with the left polygon direction string")
        ->required();
    cmd_join->add_option("--right", right_path, "file with the right polygon direction string")
        ->required();
    cmd_join->add_flag("--scan-shifts", scan_shifts, "report the full shift set instead");

    // rgj
    auto* cmd_rgj = app.add_subcommand("rgj", "build the regulation global join ensemble");
    int rgj_k = 4, rgj_l = 4;
    double rgj_rho = 0.1;
    std::string rgj_out;
    cmd_rgj->add_option("--k", rgj_k, "left length")->required();
    cmd_rgj->add_option("--l", rgj_l, "right length")->required();
    cmd_rgj->add_option("--rho", rgj_rho, "offset-window fraction (default 1/10)");
    cmd_rgj->add_option("--out", rgj_out, "JSON-lines output path")->required();

    // snake
    auto* cmd_snake = app.add_subcommand("snake", "evaluate the snake hypothesis report");
    SnakeParams sp;
    std::string snake_report;
    cmd_snake->add_option("--n", sp.n, "odd walk length")->required();
    cmd_snake->add_option("--l", sp.ell, "first-part length")->required();
    cmd_snake->add_option("--alpha", sp.alpha, "inverse charm")->required();
    cmd_snake->add_option("--beta", sp.beta, "snake length exponent")->required();
    cmd_snake->add_option("--eta", sp.eta, "charm deficit")->required();
    cmd_snake->add_option("--d", sp.d, "dimension for the constants (default 2)");
    cmd_snake->add_option("--report", snake_report, "JSON report path")->required();

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "run the verification suite");
    int verify_max_n = 8;
    std::vector<std::string> suites;
    std::string verify_report;
    double verify_rho = 1.0;
    cmd_verify->add_option("--max-n", verify_max_n, "length cap");
    cmd_verify->add_option("--suite", suites, "subset of checks to run")
        ->check(CLI::IsMember(suite_names()));
    cmd_verify->add_option("--rho", verify_rho, "window fraction for regulation checks");
    cmd_verify->add_option("--report", verify_report, "JSON report path");

    // export
    auto* cmd_export = app.add_subcommand("export", "CSV exports");
    std::string what = "counts", export_csv;
    int export_max_n = 12;
    double export_mu = 0;
    cmd_export->add_option("--what", what, "counts|exponents|gj-histogram")->required();
    cmd_export->add_option("--csv", export_csv, "output CSV path")->required();
    cmd_export->add_option("--max-n", export_max_n, "largest length");
    cmd_export->add_option("--mu", export_mu, "growth-rate override for exponents");

    CLI11_PARSE(app, argc, argv);

    EnumConfig ecfg;
    ecfg.node_budget = budget;

    try {
        if (*cmd_enum) {
            auto [cls, m_from_token] = parse_class_token(cls_token);
            int m = enum_m ? enum_m : m_from_token;
            auto table = enumerate(cls, enum_n, enum_full, ecfg, m);
            save_ensemble(table, out_path);
            std::cout << class_token(cls, m) << " n=" << enum_n << " count=" << table.count
                      << " -> " << out_path << "\n";
        } else if (*cmd_counts) {
            auto table = counts_table(counts_max_n, ecfg);
            write_counts_csv(table, counts_csv);
            std::cout << "counts to n=" << counts_max_n << " -> " << counts_csv << "\n";
        } else if (*cmd_closing) {
            uint64_t cnt = closing_count(closing_n, ecfg);
            Rational prob = closing_probability(closing_n, ecfg);
            std::cout << "closing_count(" << closing_n << ") = " << cnt << "\n";
            std::cout << "closing_probability(" << closing_n << ") = " << prob.str() << "\n";
        } else if (*cmd_join) {
            Polygon left = read_polygon_file(left_path);
            Polygon right = read_polygon_file(right_path);
            if (scan_shifts) {
                auto shifts = shift_set(left, right);
                nlohmann::json j = nlohmann::json::array();
                for (auto u : shifts) j.push_back({u.x, u.y});
                std::cout << j.dump() << "\n";
            } else {
                int t = compass_corner(left.vertex_set(), Corner::ES).y;
                auto u = canonical_placement(left, right, t);
                if (!u) fail(errc::not_joinable, "no admissible placement at the contact height");
                JoinRecord rec = madras_join(left, right.translated(*u));
                std::cout << join_record_json(rec).dump(2) << "\n";
            }
        } else if (*cmd_rgj) {
            RgjParams params{rgj_k, rgj_l, rgj_rho};
            auto records = build_rgj(params, ecfg);
            std::ofstream out(rgj_out);
            if (!out) fail(errc::io_error, "cannot open " + rgj_out);
            for (const auto& rec : records) out << join_record_json(rec).dump() << "\n";
            std::cout << "|RGJ_{" << rgj_k << "," << rgj_l << "}(rho=" << rgj_rho
                      << ")| = " << records.size() << " -> " << rgj_out << "\n";
        } else if (*cmd_snake) {
            auto rep = snake_hypothesis_eval(sp, ecfg);
            nlohmann::json j;
            j["params"] = {{"alpha", sp.alpha}, {"beta", sp.beta},   {"eta", sp.eta},
                           {"delta", sp.delta()}, {"n", sp.n},        {"l", sp.ell},
                           {"d", sp.d}};
            j["constants"] = {{"c", rep.constants.c}, {"K", rep.constants.K}};
            j["lhs"] = rep.lhs.str();
            j["rhs"] = rep.rhs;
            j["hypothesis_met"] = rep.hypothesis_met;
            j["n_threshold"] = rep.n_threshold;
            j["n_at_threshold"] = rep.n_at_threshold;
            write_text(snake_report, j.dump(2) + "\n");
            std::cout << j.dump(2) << "\n";
        } else if (*cmd_verify) {
            SuiteConfig cfg;
            cfg.max_n = verify_max_n;
            cfg.suites = suites;
            cfg.budget = budget;
            cfg.rho = verify_rho;
            auto report = run_verification_suite(cfg);
            for (const auto& c : report.checks) {
                const char* tag = c.status == CheckStatus::passed   ? "pass"
                                  : c.status == CheckStatus::failed ? "FAIL"
                                                                    : "skip";
                std::cout << "[" << tag << "] " << c.name << ": " << c.detail << "\n";
            }
            if (!verify_report.empty()) write_text(verify_report, report.to_json() + "\n");
            if (!report.all_passed) return 1;
        } else if (*cmd_export) {
            if (what == "counts") {
                write_counts_csv(counts_table(export_max_n, ecfg), export_csv);
            } else if (what == "exponents") {
                auto table = counts_table(export_max_n, ecfg, false);
                double mu = export_mu > 0
                                ? export_mu
                                : estimate_mu(counts_table(std::min(export_max_n, 12), ecfg, false))
                                      .estimate;
                std::ofstream out(export_csv);
                if (!out) fail(errc::io_error, "cannot open " + export_csv);
                out << "n,p_n,theta_n,mu\n";
                for (int n = 4; n <= export_max_n; n += 2) {
                    auto rep = exponents(n, mu, table);
                    out << n << "," << table.p[(size_t)n] << "," << *rep.theta_n << "," << mu
                        << "\n";
                }
            } else if (what == "gj-histogram") {
                std::ofstream out(export_csv);
                if (!out) fail(errc::io_error, "cannot open " + export_csv);
                out << "n,gj_count,polygons\n";
                for (int n = 4; n <= export_max_n; n += 2) {
                    std::map<size_t, uint64_t> hist;
                    auto table = enumerate(ObjectClass::polygon, n, true, ecfg);
                    for (const auto& s : table.members)
                        hist[global_join_plaquettes(Polygon::from_direction_string(s)).size()]++;
                    for (const auto& [size, cnt] : hist)
                        out << n << "," << size << "," << cnt << "\n";
                }
            } else {
                fail(errc::invalid_params, "unknown export kind: " + what);
            }
            std::cout << what << " -> " << export_csv << "\n";
        }
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
