#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "genus2/chain.hpp"
#include "genus2/defining_sequence.hpp"
#include "genus2/errors.hpp"
#include "genus2/fourway.hpp"
#include "genus2/scene_io.hpp"

namespace {

int emit_report(const genus2::VerificationReport& rep, const std::string& report_path) {
    const std::string text = rep.serialize();
    if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out) {
            std::cerr << "cannot open report path " << report_path << "\n";
            return 2;
        }
        out << text;
    }
    std::cout << text;
    return rep.overall_pass() ? 0 : 1;
}

bool parse_point(const std::string& text, genus2::Vec3& out) {
    double x, y, z;
    char tail;
    if (std::sscanf(text.c_str(), "%lf,%lf,%lf%c", &x, &y, &z, &tail) != 3) return false;
    out = {x, y, z};
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"square double torus chains: build, verify, export"};
    app.require_subcommand(1);

    double R = 1.0, r = 0.08, k = 0.0;
    int m = 0, depth = 2, level = 0;
    bool with_cores = false;
    std::string out_path, scene_path, report_path, rho1 = "holecenter", point_text;
    std::vector<std::string> skips;

    CLI::App* build = app.add_subcommand("build", "build a chain and write a scene file");
    build->add_option("--R", R)->required();
    build->add_option("--r", r)->required();
    build->add_option("--m", m)->required();
    build->add_option("--k", k);
    build->add_option("--rho1-center", rho1)->check(CLI::IsMember({"literal", "holecenter"}));
    build->add_option("--out", out_path)->required();

    CLI::App* verify = app.add_subcommand("verify", "run the full verification on a scene");
    verify->add_option("--scene", scene_path)->required();
    verify->add_option("--depth", depth);
    verify->add_option("--skip", skips)
        ->check(CLI::IsMember({"containment", "disjoint", "linking", "symmetry", "disks"}));
    verify->add_option("--report", report_path);

    CLI::App* fourway = app.add_subcommand("fourway", "certify the four-way configuration");
    fourway->add_option("--R", R)->required();
    fourway->add_option("--r", r)->required();
    fourway->add_option("--report", report_path);

    CLI::App* exp = app.add_subcommand("export", "export a stage as OBJ");
    exp->add_option("--scene", scene_path)->required();
    exp->add_option("--level", level)->required();
    exp->add_flag("--cores", with_cores);
    exp->add_option("--out", out_path)->required();

    CLI::App* member = app.add_subcommand("member", "classify a point by escape level");
    member->add_option("--scene", scene_path)->required();
    member->add_option("--point", point_text)->required();
    member->add_option("--depth", depth)->required();

    CLI::App* dim = app.add_subcommand("dim", "similarity dimension for (m, k)");
    dim->add_option("--m", m)->required();
    dim->add_option("--k", k);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (build->parsed()) {
            const genus2::ChainParams params = genus2::make_chain_params(R, r, m, k);
            const genus2::Rho1Center center = rho1 == "literal" ? genus2::Rho1Center::kLiteral
                                                                : genus2::Rho1Center::kHoleCenter;
            genus2::write_scene(genus2::build_chain(params, center), out_path);
            return 0;
        }
        if (verify->parsed()) {
            const genus2::Chain chain = genus2::read_scene(scene_path);
            genus2::VerifyOptions opts;
            opts.depth = depth;
            for (const std::string& s : skips) {
                if (s == "containment") opts.skip_containment = true;
                if (s == "disjoint") opts.skip_disjoint = true;
                if (s == "linking") opts.skip_linking = true;
                if (s == "symmetry") opts.skip_symmetry = true;
                if (s == "disks") opts.skip_disks = true;
            }
            return emit_report(genus2::run_full_verification(chain, opts), report_path);
        }
        if (fourway->parsed())
            return emit_report(genus2::verify_fourway(genus2::build_fourway(R, r)), report_path);
        if (exp->parsed()) {
            genus2::export_obj(genus2::read_scene(scene_path), level, out_path, with_cores);
            return 0;
        }
        if (member->parsed()) {
            genus2::Vec3 x;
            if (!parse_point(point_text, x)) {
                std::cerr << "invalid --point, expected x,y,z\n";
                return 2;
            }
            const genus2::Chain chain = genus2::read_scene(scene_path);
            const genus2::MembershipResult res = genus2::membership(chain, x, depth);
            if (res.contained)
                std::cout << "contained depth " << res.depth_reached << " prefix "
                          << res.prefix.to_string() << "\n";
            else
                std::cout << "escaped level " << res.escape_level << "\n";
            return 0;
        }
        if (dim->parsed()) {
            const double kk = k > 0.0 ? k : genus2::solve_k_for_m(m);
            std::printf("%.17g\n", genus2::similarity_dimension(m, kk));
            return 0;
        }
    } catch (const genus2::SceneFormatError& e) {
        std::cerr << "scene error: " << e.what() << "\n";
        return 2;
    } catch (const genus2::BudgetExceededError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 2;
}
