#pragma once

#include "latfree/bounds.hpp"
#include "latfree/freesub.hpp"
#include "latfree/lattice.hpp"
#include "latfree/order.hpp"

#include "json.hpp"

#include <string>

namespace latfree {

using json = nlohmann::json;

// lattice JSON: {"ambient_dim": n, "rank": r, "denominator": d,
//                "rows": [[int,...],...]} with integer numerator rows
json lattice_to_json(const ZLattice& x);
ZLattice lattice_from_json(const json& j);
ZLattice load_lattice(const std::string& path);
void save_lattice(const ZLattice& x, const std::string& path);

// big values as {"value": "...", "factors": {"2": 3, ...}}; the decimal
// string is included when the numerator and denominator fit 64 bits
json module_index_to_json(const ModuleIndex& m);

json order_to_json(const OrderDesc& o);

json bound_report_to_json(const BoundReport& r);

json certificate_to_json(const FreeSubCertificate& c);

SplitData load_split_data(const std::string& path, std::size_t group_size);

}  // namespace latfree
