#include "latfree/bounds.hpp"
#include "latfree/freesub.hpp"
#include "latfree/json_io.hpp"
#include "latfree/order.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <memory>

using namespace latfree;

namespace {

std::shared_ptr<const FinGroup> parse_group(const std::string& spec) {
    return std::make_shared<const FinGroup>(FinGroup::parse(spec));
}

void emit(const json& j, const std::string& format) {
    if (format == "table") {
        // flat two-column rendering of the top-level fields
        for (const auto& [k, v] : j.items())
            std::cout << k << "\t" << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    } else {
        std::cout << j.dump(1) << "\n";
    }
}

ModuleIndex maximal_index(const std::shared_ptr<const FinGroup>& g, const OrderDesc& zg,
                          const OrderDesc& mx) {
    return module_index(mx.lattice(), zg.lattice());
}

int cmd_index(const std::string& a, const std::string& b, const std::string& format) {
    ZLattice la = load_lattice(a), lb = load_lattice(b);
    ModuleIndex idx = module_index(la, lb);
    json out{{"index", idx.str()}, {"detail", module_index_to_json(idx)}};
    emit(out, format);
    return 0;
}

int cmd_maxorder(const std::string& spec, const std::string& format, const std::string& out_path) {
    auto g = parse_group(spec);
    OrderDesc zg = group_ring_order(g);
    OrderDesc mx = maximal_order(g);
    ModuleIndex idx = maximal_index(g, zg, mx);
    json out{{"group", spec},
             {"abelian", g->abelian()},
             {"index_over_group_ring", idx.str()},
             {"index_detail", module_index_to_json(idx)},
             {"discriminant_group_ring", discriminant(zg).get_str()},
             {"discriminant_maximal", discriminant(mx).get_str()},
             {"lattice", lattice_to_json(mx.lattice())}};
    if (!out_path.empty()) save_lattice(mx.lattice(), out_path);
    emit(out, format);
    return 0;
}

int cmd_conductor(const std::string& spec, const std::string& format) {
    auto g = parse_group(spec);
    OrderDesc zg = group_ring_order(g);
    OrderDesc mx = maximal_order(g);
    ZLattice cond = conductor(mx, zg);
    ZLattice cond_r = conductor_right(mx, zg);
    ModuleIndex m_over = module_index(mx.lattice(), zg.lattice());
    ModuleIndex zg_over_cond = module_index(zg.lattice(), cond);
    json out{{"group", spec},
             {"index_m_over_zg", m_over.str()},
             {"index_zg_over_conductor", zg_over_cond.str()},
             {"left_equals_right", cond == cond_r},
             {"symmetry_holds", m_over.value == zg_over_cond.value},
             {"conductor", lattice_to_json(cond)}};
    emit(out, format);
    return out["symmetry_holds"].get<bool>() && out["left_equals_right"].get<bool>() ? 0 : 1;
}

int cmd_bounds(const std::string& spec, std::size_t rank, const std::string& mode_s,
               const std::string& split_path, const std::string& format) {
    auto g = parse_group(spec);
    BoundMode mode = mode_s == "lattice"          ? BoundMode::lattice
                     : mode_s == "trace_quotient" ? BoundMode::trace_quotient
                     : mode_s == "minkowski"      ? BoundMode::minkowski
                     : mode_s == "nib"            ? BoundMode::nib
                                                  : throw CLI::ValidationError("bad --mode");
    ModuleIndex m_index;
    if (g->abelian()) {
        m_index = index_formula_abelian(*g);
    } else if (!split_path.empty()) {
        SplitData sd = load_split_data(split_path, g->size());
        std::vector<GeneralComponent> comps;
        for (const auto& c : sd.components) comps.push_back({c.k_deg, c.n_i, c.inv_diff_index});
        m_index = index_formula_general(g->size(), comps);
    } else {
        OrderDesc zg = group_ring_order(g);
        m_index = module_index(maximal_order_idealizer(zg).lattice(), zg.lattice());
    }
    BoundReport r = theorem_bounds(*g, rank, mode, m_index);
    emit(bound_report_to_json(r), format);
    return 0;
}

int cmd_freesub(const std::string& spec, std::size_t rank, unsigned long denom, std::uint64_t seed,
                unsigned long coprime, unsigned height_cap, bool tq, const std::string& lattice_path,
                const std::string& format) {
    auto g = parse_group(spec);
    FreeSubOptions opt;
    opt.coprime_to = Int(coprime);
    opt.height_cap = height_cap;
    FreeSubCertificate cert;
    if (!tq) {
        OrderDesc zg = group_ring_order(g);
        OrderDesc mx = maximal_order(g);
        ZLattice x = lattice_path.empty() ? random_stable_lattice(zg, rank, denom, seed)
                                          : load_lattice(lattice_path);
        cert = free_sublattice(zg, mx, x, rank, opt);
    } else {
        OrderDesc zg = group_ring_order(g);
        OrderDesc mx = maximal_order(g);
        OrderDesc le = trace_quotient_order(zg, g);
        OrderDesc me = trace_quotient_order(mx, g);
        ModuleIndex m_over = module_index(mx.lattice(), zg.lattice());
        ZLattice x = lattice_path.empty() ? random_stable_lattice_tq(le, rank, denom, seed)
                                          : load_lattice(lattice_path);
        cert = trace_quotient_free_sublattice(le, me, m_over, g->size(), g->abelian(), x, rank, opt);
    }
    json out = certificate_to_json(cert);
    out["seed"] = seed;
    out["denom"] = denom;
    emit(out, format);
    return cert.verdict == Verdict::ok ? 0 : 1;
}

int cmd_verify(const std::string& suite, const std::string& group_set, const std::string& format);

}  // namespace

#include "verify_suites.inc"

int main(int argc, char** argv) {
    CLI::App app{"exact lattice arithmetic over integral group rings: indices, maximal orders, "
                 "conductors, bounds, and certified free sublattices"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "json";
    app.add_option("--format", format, "output format: json or table")
        ->check(CLI::IsMember({"json", "table"}));

    std::string lat_a, lat_b;
    auto* s_index = app.add_subcommand("index", "generalized module index of two lattice files");
    s_index->add_option("latticeA", lat_a)->required();
    s_index->add_option("latticeB", lat_b)->required();

    std::string group, out_path;
    auto* s_max = app.add_subcommand("maxorder", "maximal order containing Z[G]");
    s_max->add_option("--group", group)->required();
    s_max->add_option("--out", out_path, "also write the lattice JSON here");

    auto* s_cond = app.add_subcommand("conductor", "conductor of the maximal order into Z[G]");
    s_cond->add_option("--group", group)->required();

    std::size_t rank = 1;
    std::string mode = "lattice", split_path;
    auto* s_bounds = app.add_subcommand("bounds", "theorem bounds and predicates");
    s_bounds->add_option("--group", group)->required();
    s_bounds->add_option("--rank", rank);
    s_bounds->add_option("--mode", mode);
    s_bounds->add_option("--split-data", split_path, "rational split data JSON for nonabelian G");

    unsigned long denom = 2, coprime = 1;
    std::uint64_t seed = 1;
    unsigned height_cap = 8;
    bool tq = false;
    std::string lattice_path;
    auto* s_free = app.add_subcommand("freesub", "free sublattice certificate");
    s_free->add_option("--group", group)->required();
    s_free->add_option("--rank", rank);
    s_free->add_option("--denom", denom);
    s_free->add_option("--seed", seed);
    s_free->add_option("--coprime-to", coprime);
    s_free->add_option("--height-cap", height_cap);
    s_free->add_flag("--trace-quotient", tq);
    s_free->add_option("--lattice", lattice_path, "use this lattice JSON instead of a seeded one");

    std::string suite, group_set = "default";
    auto* s_verify = app.add_subcommand("verify", "run an acceptance battery");
    s_verify->add_option("--suite", suite)->required()->check(
        CLI::IsMember({"formulas", "conductor", "theorems"}));
    s_verify->add_option("--group-set", group_set);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (s_index->parsed()) return cmd_index(lat_a, lat_b, format);
        if (s_max->parsed()) return cmd_maxorder(group, format, out_path);
        if (s_cond->parsed()) return cmd_conductor(group, format);
        if (s_bounds->parsed()) return cmd_bounds(group, rank, mode, split_path, format);
        if (s_free->parsed())
            return cmd_freesub(group, rank, denom, seed, coprime, height_cap, tq, lattice_path,
                               format);
        if (s_verify->parsed()) return cmd_verify(suite, group_set, format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
