#include "genus2/scene_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>

#include "genus2/defining_sequence.hpp"
#include "genus2/errors.hpp"
#include "genus2/fourway.hpp"
#include "genus2/linking.hpp"

namespace genus2 {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

[[noreturn]] void fail(const std::string& what, long line) { throw SceneFormatError(what, line); }

double parse_double(std::istringstream& ss, long line) {
    double v;
    if (!(ss >> v)) fail("expected a number", line);
    return v;
}

void expect_token(std::istringstream& ss, const std::string& token, long line) {
    std::string got;
    if (!(ss >> got) || got != token) fail("expected token '" + token + "'", line);
}

}  // namespace

void write_scene(const Chain& chain, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_scene: cannot open " + path);
    out << "genus2-scene v1\n";
    out << "params " << fmt(chain.params.R) << ' ' << fmt(chain.params.r) << ' '
        << fmt(chain.params.k) << ' ' << chain.params.m << '\n';
    for (int j = 1; j <= chain.params.m; ++j) {
        const Similarity& s = chain.maps[static_cast<std::size_t>(j - 1)];
        out << "map " << j << " scale " << fmt(s.scale()) << " rot";
        for (int rr = 0; rr < 3; ++rr)
            for (int cc = 0; cc < 3; ++cc) out << ' ' << fmt(s.rotation()(rr, cc));
        const Vec3& t = s.translation();
        out << " trans " << fmt(t.x) << ' ' << fmt(t.y) << ' ' << fmt(t.z) << '\n';
    }
    if (!out) throw std::runtime_error("write_scene: write failed for " + path);
}

Chain read_scene(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("read_scene: cannot open " + path);

    long line_no = 0;
    std::string line;
    auto next_line = [&]() {
        if (!std::getline(in, line)) fail("unexpected end of file", line_no);
        ++line_no;
    };

    next_line();
    if (line != "genus2-scene v1") fail("unsupported scene version '" + line + "'", line_no);

    next_line();
    std::istringstream ps(line);
    expect_token(ps, "params", line_no);
    const double R = parse_double(ps, line_no);
    const double r = parse_double(ps, line_no);
    const double k = parse_double(ps, line_no);
    long m = 0;
    if (!(ps >> m)) fail("expected integer m", line_no);

    ChainParams params;
    try {
        params = make_chain_params(R, r, static_cast<int>(m), k);
    } catch (const std::invalid_argument& e) {
        fail(e.what(), line_no);
    }

    std::vector<Similarity> maps;
    maps.reserve(static_cast<std::size_t>(m));
    for (long j = 1; j <= m; ++j) {
        next_line();
        std::istringstream ms(line);
        expect_token(ms, "map", line_no);
        long idx = 0;
        if (!(ms >> idx) || idx != j) fail("map index out of order", line_no);
        expect_token(ms, "scale", line_no);
        const double scale = parse_double(ms, line_no);
        if (!(std::fabs(scale - k) <= 1e-12 * k)) fail("map scale differs from k", line_no);
        expect_token(ms, "rot", line_no);
        Mat3 rot;
        for (int rr = 0; rr < 3; ++rr)
            for (int cc = 0; cc < 3; ++cc) rot(rr, cc) = parse_double(ms, line_no);
        expect_token(ms, "trans", line_no);
        Vec3 t;
        t.x = parse_double(ms, line_no);
        t.y = parse_double(ms, line_no);
        t.z = parse_double(ms, line_no);
        std::string extra;
        if (ms >> extra) fail("trailing data after map record", line_no);
        try {
            maps.emplace_back(scale, rot, t);
        } catch (const std::invalid_argument& e) {
            fail(e.what(), line_no);
        }
    }

    const DoubleTorus x0 = make_canonical_double_torus(params.R, params.r);
    std::vector<DoubleTorus> components;
    components.reserve(maps.size());
    for (const Similarity& s : maps) components.push_back(apply_similarity(s, x0));
    return Chain{params, std::move(maps), std::move(components), Rho1Center::kHoleCenter};
}

void export_obj(const Chain& chain, int level, const std::string& path, bool with_cores,
                long budget) {
    const std::vector<Component> comps = expand_level(chain, level, budget);
    std::ofstream out(path);
    if (!out) throw std::runtime_error("export_obj: cannot open " + path);

    // Quad faces of a beam in the corner-index convention of
    // Beam::corners (index = 4*sx + 2*sy + sz), wound outward for a
    // right-handed frame.
    static const int quads[6][4] = {{4, 6, 7, 5}, {0, 1, 3, 2}, {2, 3, 7, 6},
                                    {0, 4, 5, 1}, {1, 5, 7, 3}, {0, 2, 6, 4}};

    long base = 0;
    for (const Component& comp : comps) {
        out << "g X_" << comp.address.to_string() << '\n';
        for (const Beam& b : comp.solid.beams()) {
            const auto cs = b.corners();
            for (const Vec3& c : cs)
                out << "v " << fmt(c.x) << ' ' << fmt(c.y) << ' ' << fmt(c.z) << '\n';
            const bool flip = triple(b.frame[0], b.frame[1], b.frame[2]) < 0.0;
            for (const auto& q : quads) {
                const int a = q[0], bb = flip ? q[3] : q[1], c = q[2], d = flip ? q[1] : q[3];
                out << "f " << base + a + 1 << ' ' << base + bb + 1 << ' ' << base + c + 1 << '\n';
                out << "f " << base + a + 1 << ' ' << base + c + 1 << ' ' << base + d + 1 << '\n';
            }
            base += 8;
        }
        if (with_cores) {
            const auto [c1, c2] = core_loops(comp.solid);
            for (const PolyLoop* loop : {&c1, &c2}) {
                for (const Vec3& v : loop->vertices)
                    out << "v " << fmt(v.x) << ' ' << fmt(v.y) << ' ' << fmt(v.z) << '\n';
                out << "l";
                for (int i = 0; i < 4; ++i) out << ' ' << base + i + 1;
                out << ' ' << base + 1 << '\n';
                base += 4;
            }
        }
    }
    if (!out) throw std::runtime_error("export_obj: write failed for " + path);
}

VerificationReport run_full_verification(const Chain& chain, const VerifyOptions& opts) {
    VerificationReport rep;
    const ChainParams& p = chain.params;

    for (const CheckRecord& c : verify_fourway(build_fourway(p.R, p.r)).checks) rep.checks.push_back(c);

    const bool thickness_ok = p.r < max_thickness(p.R);
    rep.add("params.thickness_bound", thickness_ok, max_thickness(p.R) - p.r);
    rep.add("params.kbound", kbound_satisfied(p.R, p.r, p.k),
            p.r - 2.0 * std::sqrt(2.0) * p.k * (2.0 * p.R + p.r));

    VerificationReport chain_rep = verify_chain(chain, !opts.skip_containment);
    for (CheckRecord& c : chain_rep.checks) {
        if (opts.skip_disjoint && c.name == "chain.disjoint") continue;
        if (opts.skip_linking &&
            (c.name == "chain.consecutive_hopf" || c.name == "chain.companion_unlinked" ||
             c.name == "chain.nonadjacent_unlinked" || c.name == "chain.origin_fourway"))
            continue;
        rep.checks.push_back(c);
    }

    // Nesting: exhaustive when the stage fits a small budget, otherwise a
    // seeded sample; either way the conclusion for deeper stages is the
    // similarity corollary recorded below.
    if (!opts.skip_containment && opts.depth >= 2) {
        bool pass = true;
        long tested = 0;
        std::string detail;
        const double stage2 = static_cast<double>(p.m) * p.m;
        if (stage2 <= 2048.0) {
            for (int a = 1; a <= p.m && pass; ++a) {
                const Component parent = component(chain, Address{{a}});
                for (int b = 1; b <= p.m; ++b) {
                    const Component child = component(chain, Address{{a, b}});
                    ++tested;
                    if (!contains_solid(parent.solid, child.solid)) {
                        pass = false;
                        detail = child.address.to_string();
                        break;
                    }
                }
            }
            if (detail.empty()) detail = "exhaustive";
        } else {
            std::mt19937 rng(0x67656e32u);
            std::uniform_int_distribution<int> pick(1, p.m);
            for (int trial = 0; trial < 64; ++trial) {
                const int a = pick(rng);
                const int b = pick(rng);
                const Component parent = component(chain, Address{{a}});
                const Component child = component(chain, Address{{a, b}});
                ++tested;
                if (!contains_solid(parent.solid, child.solid)) {
                    pass = false;
                    detail = child.address.to_string();
                    break;
                }
            }
            if (detail.empty()) detail = "sampled";
        }
        rep.add("nesting.depth2", pass, static_cast<double>(tested), detail);
    }

    if (!opts.skip_disks) {
        const int half = p.m / 2;
        bool pass = true;
        std::string bad;
        long checked = 0;
        for (int j = 1; j <= p.m; ++j) {
            const int nj = j <= half ? (j % half) + 1 : half + ((j - half) % half) + 1;
            const PolyLoop exit_j = entry_exit_cores(chain, j).second;
            const PolyLoop entry_n = entry_exit_cores(chain, nj).first;
            try {
                const PlanarDisk disk = canonical_filling_disk(exit_j);
                const int signed_count = signed_piercing_count(disk_piercings(disk, entry_n));
                const int lk = gauss_linking_number(exit_j, entry_n).lk;
                ++checked;
                if (signed_count != lk) {
                    pass = false;
                    if (bad.empty())
                        bad = std::to_string(j) + "," + std::to_string(nj) + " pierce=" +
                              std::to_string(signed_count) + " lk=" + std::to_string(lk);
                }
            } catch (const std::exception&) {
                pass = false;
                if (bad.empty()) bad = std::to_string(j) + "," + std::to_string(nj) + " degenerate";
            }
        }
        rep.add("disks.consecutive_piercings", pass, static_cast<double>(checked), bad);
    }

    if (!opts.skip_symmetry)
        rep.add("symmetry.iota1", check_level1_symmetry(chain), 0.0);

    const CheckRecord* disjoint = rep.find("chain.disjoint");
    const CheckRecord* containment = rep.find("chain.containment");
    if (disjoint && containment) {
        const bool hierarchy = disjoint->pass && containment->pass;
        rep.add("hierarchy.disjoint_all_levels", hierarchy,
                hierarchy ? std::min(disjoint->margin, containment->margin) : 0.0, "derived");
    }

    return rep;
}

VerificationReport run_full_verification(const ChainParams& params, int depth) {
    VerifyOptions opts;
    opts.depth = depth;
    return run_full_verification(build_chain(params), opts);
}

}  // namespace genus2
