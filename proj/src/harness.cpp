#include "latfree/harness.hpp"

#include "latfree/json_io.hpp"

#include <cstdlib>
#include <sstream>

namespace latfree {

std::string fixtures_directory() {
    if (const char* env = std::getenv("LATFREE_FIXTURES")) return env;
#ifdef LATFREE_FIXTURE_DIR
    return LATFREE_FIXTURE_DIR;
#else
    return "fixtures";
#endif
}

namespace {

// partitions of the multiset structure: all invariant-factor chains
// d1 | d2 | ... | dk with product n
void chains_into(unsigned long n, unsigned long min_div, std::vector<unsigned long>& cur,
                 std::vector<std::vector<unsigned long>>& out) {
    if (n == 1) {
        if (!cur.empty()) out.push_back(cur);
        return;
    }
    for (unsigned long d : divisors(n)) {
        if (d < 2 || d < min_div) continue;
        if (!cur.empty() && d % cur.back() != 0) continue;
        cur.push_back(d);
        chains_into(n / d, 2, cur, out);
        cur.pop_back();
    }
}

std::shared_ptr<const FinGroup> make_group(const std::string& spec) {
    return std::make_shared<const FinGroup>(FinGroup::parse(spec));
}

CheckResult check(const std::string& name, bool pass, const std::string& detail = "") {
    return CheckResult{name, pass, detail};
}

}  // namespace

std::vector<std::string> abelian_group_specs(unsigned long max_order) {
    std::vector<std::string> specs;
    for (unsigned long n = 1; n <= max_order; ++n) {
        if (n == 1) {
            specs.push_back("C1");
            continue;
        }
        std::vector<std::vector<unsigned long>> chains;
        std::vector<unsigned long> cur;
        // invariant factors listed largest-last; build ascending chains
        chains_into(n, 2, cur, chains);
        for (auto& ch : chains) {
            std::ostringstream os;
            for (std::size_t i = 0; i < ch.size(); ++i) os << (i ? "x" : "") << "C" << ch[i];
            specs.push_back(os.str());
        }
    }
    return specs;
}

std::vector<CheckResult> battery_formulas(unsigned long max_order) {
    std::vector<CheckResult> out;
    for (const std::string& spec : abelian_group_specs(max_order)) {
        auto g = make_group(spec);
        OrderDesc zg = group_ring_order(g);
        OrderDesc mx = maximal_order_abelian(g);
        ModuleIndex computed = module_index(mx.lattice(), zg.lattice());
        ModuleIndex formula = index_formula_abelian(*g);
        out.push_back(check("abelianformula/" + spec, computed == formula,
                            "computed " + computed.str() + " vs formula " + formula.str()));
    }
    struct PP {
        const char* spec;
        unsigned long p, k;
    };
    for (const PP& c : {PP{"C2", 2, 1}, PP{"C3", 3, 1}, PP{"C4", 2, 2}, PP{"C5", 5, 1},
                        PP{"C7", 7, 1}, PP{"C8", 2, 3}, PP{"C9", 3, 2}}) {
        auto g = make_group(c.spec);
        ModuleIndex formula = index_formula_abelian(*g);
        Int expect(1);
        unsigned long e = 0, pk = 1;
        for (unsigned long i = 0; i < c.k; ++i) {
            e += pk;
            pk *= c.p;
        }
        expect = int_pow(Int(c.p), e);
        out.push_back(check(std::string("cyclic-prime-power/") + c.spec,
                            formula.value == Rat(expect),
                            formula.str() + " vs p^(1+p+..+p^(k-1)) = " + expect.get_str()));
    }
    return out;
}

std::vector<CheckResult> battery_conductor(unsigned long max_order, const std::string& fixtures_dir) {
    std::vector<CheckResult> out;
    for (const std::string& spec : abelian_group_specs(max_order)) {
        auto g = make_group(spec);
        if (g->size() < 2) continue;
        OrderDesc zg = group_ring_order(g);
        OrderDesc mx = maximal_order_abelian(g);
        ZLattice cond = conductor(mx, zg);
        ZLattice cond_r = conductor_right(mx, zg);
        WedderburnData w = abelian_wedderburn(g);
        std::vector<unsigned long> ones(w.components.size(), 1);
        ZLattice jac = jacobinski_conductor(mx, abelian_idempotent_rows(w), ones, g->size());
        out.push_back(check("jacobinski/" + spec, cond == jac && cond == cond_r));
        ModuleIndex m_over = module_index(mx.lattice(), zg.lattice());
        ModuleIndex sym = module_index(zg.lattice(), cond);
        ModuleIndex both = module_index(mx.lattice(), cond);
        bool eq = m_over == sym && both.value == m_over.value * sym.value;
        out.push_back(check("index-symmetry/" + spec, eq,
                            "[M:ZG]=" + m_over.str() + " [ZG:cond]=" + sym.str()));
    }
    // S3 with supplied split data
    {
        auto g = make_group("table:" + fixtures_dir + "/groups/s3.json");
        OrderDesc zg = group_ring_order(g);
        OrderDesc mx = maximal_order_idealizer(zg);
        ZLattice cond = conductor(mx, zg);
        SplitData sd = load_split_data(fixtures_dir + "/split/s3.json", g->size());
        std::vector<RatMatrix> idems;
        std::vector<unsigned long> ns;
        for (const auto& c : sd.components) {
            if (!c.central_idempotent)
                throw std::runtime_error("s3 split data lacks central idempotents");
            idems.push_back(*c.central_idempotent);
            ns.push_back(c.n_i);
        }
        ZLattice jac = jacobinski_conductor(mx, idems, ns, g->size());
        out.push_back(check("jacobinski/S3", cond == jac));
        ModuleIndex m_over = module_index(mx.lattice(), zg.lattice());
        ModuleIndex sym = module_index(zg.lattice(), cond);
        out.push_back(check("index-symmetry/S3", m_over == sym));
    }
    return out;
}

std::vector<CheckResult> battery_theorems(const TheoremHarnessConfig& cfg) {
    std::vector<CheckResult> out;
    auto push = [&](CheckResult r) {
        if (cfg.on_result) cfg.on_result(r);
        out.push_back(std::move(r));
    };
    for (const std::string& spec : cfg.groups) {
        auto g = make_group(spec);
        OrderDesc zg = group_ring_order(g);
        OrderDesc mx = maximal_order(g);
        for (std::size_t n : cfg.ranks)
            for (unsigned long denom : cfg.denoms)
                for (std::size_t s = 0; s < cfg.seeds_per_combo; ++s) {
                    std::uint64_t seed = 1000 * n + 10 * denom + s;
                    ZLattice x = random_stable_lattice(zg, n, denom, seed);
                    FreeSubCertificate cert = free_sublattice(zg, mx, x, n);
                    bool ok = cert.verdict == Verdict::ok && cert.i_factor.is_one();
                    std::ostringstream nm;
                    nm << "gpringmain/" << spec << "/n" << n << "/d" << denom << "/s" << s;
                    push(check(nm.str(), ok,
                               "verdict=" + std::string(cert.verdict == Verdict::ok ? "true"
                                                        : cert.verdict == Verdict::failed
                                                            ? "false"
                                                            : "incomplete") +
                                   " i=" + cert.i_factor.str() +
                                   (cert.total_index ? " [X:Z]=" + cert.total_index->str() : "")));
                }
    }
    for (const std::string& spec : cfg.tq_groups) {
        auto g = make_group(spec);
        OrderDesc zg = group_ring_order(g);
        OrderDesc mx = maximal_order(g);
        OrderDesc le = trace_quotient_order(zg, g);
        OrderDesc me = trace_quotient_order(mx, g);
        ModuleIndex m_over = module_index(mx.lattice(), zg.lattice());
        for (std::size_t s = 0; s < cfg.tq_seeds; ++s) {
            unsigned long denom = 2 + (s % cfg.tq_denom_cycle);
            ZLattice x = random_stable_lattice_tq(le, 1, denom, 7000 + s);
            FreeSubCertificate cert =
                trace_quotient_free_sublattice(le, me, m_over, g->size(), g->abelian(), x, 1);
            bool ok = cert.verdict == Verdict::ok;
            // bound 1 forces the total index to be exactly 1
            if (ok && cert.claimed_bound.value == 1 && cert.total_index)
                ok = cert.total_index->is_one();
            std::ostringstream nm;
            nm << "augmain/" << spec << "/s" << s;
            push(check(nm.str(), ok,
                       std::string("verdict=") +
                           (cert.verdict == Verdict::ok ? "true" : "not-true") +
                           (cert.total_index ? " [X:Z]=" + cert.total_index->str() : "") +
                           " bound=" + cert.claimed_bound.str()));
        }
    }
    return out;
}

}  // namespace latfree
