#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "hyperknot/braid.hpp"
#include "hyperknot/cocycle.hpp"
#include "hyperknot/quandle.hpp"
#include "hyperknot/sequence.hpp"
#include "hyperknot/statesum.hpp"

namespace hyperknot {

using Json = nlohmann::ordered_json;

Json ring_to_json(const RingSpec& spec);  // {"p": int, "h": [int]}
RingSpecPtr ring_from_json(const Json& doc);

/// {"n": int, "op": [[int]]}, plus a "ring" block when the quandle carries
/// one. On load a declared ring must reproduce the stored table.
Json quandle_to_json(const Quandle& q);
Quandle quandle_from_json(const Json& doc);

/// The raw op table of a quandle document, shape-checked against "n" but
/// not against the axioms.
std::vector<std::vector<int>> quandle_table_from_json(const Json& doc);

Json group_to_json(const AbelianGroup& group);  // {"orders": [int]}
AbelianGroup group_from_json(const Json& doc);

/// {"orders": [int], "phi": [[[int, ...]]]}: an n x n table of tuples.
Json cocycle_to_json(const Cocycle& phi);
Cocycle cocycle_from_json(const Json& doc);

Json statesum_to_json(const StateSum& z);       // {"orders": [int], "counts": [int]}
Json free_energy_to_json(const FreeEnergy& f);  // numbers, null where undefined

Json braid_to_json(const BraidWord& w);  // {"strands": int, "letters": [[index, sign]]}
BraidWord braid_from_json(const Json& doc);

Json report_to_json(const SequenceReport& report);

/// '#'-prefixed header lines (report summary, then any extras), a column
/// header, and one row per n. Floats carry 12 significant digits.
std::string report_to_csv(const SequenceReport& report,
                          const std::vector<std::string>& extra_headers = {});

std::string format_double(double v);

Json load_json_file(const std::string& path);
void save_text_file(const std::string& path, const std::string& text);

}  // namespace hyperknot
