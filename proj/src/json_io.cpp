#include "latfree/json_io.hpp"

#include <fstream>

namespace latfree {

json lattice_to_json(const ZLattice& x) {
    json rows = json::array();
    const RatMatrix& b = x.basis();
    for (std::size_t i = 0; i < b.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < b.cols(); ++j) {
            const Int& v = b.num(i, j);
            if (v.fits_slong_p())
                row.push_back(v.get_si());
            else
                row.push_back(v.get_str());
        }
        rows.push_back(row);
    }
    return json{{"ambient_dim", x.ambient_dim()},
                {"rank", x.rank()},
                {"denominator", b.den().fits_slong_p() ? json(b.den().get_si()) : json(b.den().get_str())},
                {"rows", rows}};
}

static Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument("expected an integer or integer string");
}

ZLattice lattice_from_json(const json& j) {
    std::size_t amb = j.at("ambient_dim").get<std::size_t>();
    Int den = int_from_json(j.at("denominator"));
    std::vector<std::vector<Int>> rows;
    for (const auto& r : j.at("rows")) {
        std::vector<Int> row;
        for (const auto& v : r) row.push_back(int_from_json(v));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("lattice JSON has no rows");
    ZLattice x(amb, RatMatrix::from_int_rows(rows, den));
    if (j.contains("rank") && j.at("rank").get<std::size_t>() != x.rank())
        throw std::invalid_argument("lattice JSON rank disagrees with its rows");
    return x;
}

ZLattice load_lattice(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open lattice file: " + path);
    json j;
    in >> j;
    return lattice_from_json(j);
}

void save_lattice(const ZLattice& x, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write lattice file: " + path);
    out << lattice_to_json(x).dump(1) << "\n";
}

json module_index_to_json(const ModuleIndex& m) {
    json factors = json::object();
    for (const auto& [p, e] : m.factors) factors[p.get_str()] = e;
    json out{{"factors", factors}};
    if (m.value.get_num().fits_slong_p() && m.value.get_den().fits_slong_p())
        out["value"] = rat_to_string(m.value);
    else
        out["value_str"] = rat_to_string(m.value);
    return out;
}

json order_to_json(const OrderDesc& o) {
    json j = lattice_to_json(o.lattice());
    json unit = json::array();
    for (std::size_t i = 0; i < o.unit_coords().cols(); ++i)
        unit.push_back(rat_to_string(o.unit_coords().at(0, i)));
    j["unit"] = unit;
    json tensor = json::array();
    const auto& lm = o.algebra().mul_tensor();
    for (const auto& m : lm) {
        json mat = json::array();
        for (std::size_t r = 0; r < m.rows(); ++r) {
            json row = json::array();
            for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rat_to_string(m.at(r, c)));
            mat.push_back(row);
        }
        tensor.push_back(mat);
    }
    j["mul_tensor"] = tensor;
    return j;
}

static const char* tristate_str(TriState t) {
    switch (t) {
        case TriState::yes: return "true";
        case TriState::no: return "false";
        default: return "unknown";
    }
}

json bound_report_to_json(const BoundReport& r) {
    const char* mode = r.mode == BoundMode::lattice          ? "lattice"
                       : r.mode == BoundMode::trace_quotient ? "trace_quotient"
                       : r.mode == BoundMode::minkowski      ? "minkowski"
                                                             : "nib";
    return json{{"group", r.group_spec},
                {"rank", r.n},
                {"s", r.s},
                {"mode", mode},
                {"m_index", module_index_to_json(r.m_index)},
                {"exact_bound", module_index_to_json(r.exact_bound)},
                {"crude_bound", module_index_to_json(r.crude_bound)},
                {"exact_divides_crude", r.exact_divides_crude},
                {"locally_free_implies_free", tristate_str(r.lff)},
                {"i_factor", r.i_factor_certified_one
                                 ? json("1")
                                 : json("uncertified, supply per-instance certificate")},
                {"trivial_class_group_ZG", tristate_str(r.trivial_cl_zg)},
                {"exponent_in_sigma", r.sigma_member}};
}

json certificate_to_json(const FreeSubCertificate& c) {
    json gens = json::array();
    for (const auto& g : c.generators) {
        json row = json::array();
        for (std::size_t j = 0; j < g.cols(); ++j) row.push_back(rat_to_string(g.at(0, j)));
        gens.push_back(row);
    }
    json pieces = json::array();
    for (const auto& p : c.piece_indices) pieces.push_back(p.str());
    json j{{"group", c.group_spec},
           {"rank", c.rank},
           {"trace_quotient", c.trace_quotient},
           {"input_hash", c.input_hash},
           {"generators", gens},
           {"piece_indices", pieces},
           {"i_factor", c.i_factor.str()},
           {"base_bound", module_index_to_json(c.base_bound)},
           {"claimed_bound", module_index_to_json(c.claimed_bound)},
           {"verdict", c.verdict == Verdict::ok         ? "true"
                       : c.verdict == Verdict::failed   ? "false"
                                                        : "incomplete"},
           {"coprime_target", c.coprime_target.get_str()},
           {"coprimality_achieved", c.coprimality_achieved},
           {"search", json{{"candidates_tried", c.stats.candidates_tried},
                           {"height_reached", c.stats.height_reached},
                           {"exhausted", c.stats.exhausted}}}};
    if (c.index_x_sub) j["index_x_over_msub"] = module_index_to_json(*c.index_x_sub);
    if (c.index_sub_y) j["index_msub_over_y"] = module_index_to_json(*c.index_sub_y);
    if (c.index_y_z) j["index_y_over_z"] = module_index_to_json(*c.index_y_z);
    if (c.total_index) j["total_index"] = module_index_to_json(*c.total_index);
    return j;
}

SplitData load_split_data(const std::string& path, std::size_t group_size) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open split data file: " + path);
    json j;
    in >> j;
    SplitData out;
    unsigned long dim = 0;
    for (const auto& c : j.at("components")) {
        SplitComponent sc;
        sc.k_deg = c.at("k_deg").get<unsigned long>();
        sc.n_i = c.at("n_i").get<unsigned long>();
        sc.inv_diff_index = int_from_json(c.at("inv_diff_index"));
        if (c.contains("central_idempotent")) {
            std::vector<Rat> row;
            for (const auto& v : c.at("central_idempotent"))
                row.push_back(rat_from_string(v.get<std::string>()));
            if (row.size() != group_size)
                throw std::invalid_argument("central idempotent has wrong length in " + path);
            sc.central_idempotent = RatMatrix::from_rows({row});
        }
        dim += sc.k_deg * sc.n_i * sc.n_i;
        out.components.push_back(std::move(sc));
    }
    if (dim != group_size)
        throw std::invalid_argument("split components do not sum to |G| in " + path);
    return out;
}

}  // namespace latfree
