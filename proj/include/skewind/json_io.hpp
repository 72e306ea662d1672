#ifndef SKEWIND_JSON_IO_HPP_
#define SKEWIND_JSON_IO_HPP_

// JSON forms of every structure. Partial tables use -1 for undefined.
//
//   skew lattice  {"order": n, "ops": {"meet": [[..]], "join": [[..]]}}
//   group         {"order": n, "ops": {"mul": [[..]]}}
//   groupoid      {"objects": n, "morphisms": [{"dom": d, "cod": c}, ..],
//                  "comp": [[..]], "inv": [..], "identity": [..]}
//   system        {"groupoid": {..}, "objects": {skew lattice},
//                  "restL": [[..]], "restR": [[..]],
//                  "extL": [[..]], "extR": [[..]]}
//   algebra       {"order": n, "join": [[..]], "meet": [[..]], "star": [..]}
//   action        {"group": {..}, "lattice": {..}, "act": [[..]]}
//
// The readers accept a document that contains the wanted block under its
// usual key (a model file, say) as well as the bare block. Malformed input
// throws Error(malformed_input).

#include <string>

#include <json.hpp>

#include "algebra.hpp"
#include "groupoid.hpp"
#include "models.hpp"
#include "report.hpp"
#include "restriction_system.hpp"
#include "tables.hpp"

namespace skewind::json_io {

  using json = nlohmann::json;

  json to_json(SkewLatticeTable const& s);
  json to_json(GroupTable const& g);
  json to_json(FiniteGroupoid const& g);
  json to_json(RestrictionSystem const& s);
  json to_json(BiBandAlgebra const& s);
  json to_json(GroupAction const& a);
  json to_json(AxiomReport const& r);
  json to_json(ModelInstance const& m);
  json to_json(Isomorphism const& m);

  SkewLatticeTable  read_skew_lattice(json const& j);
  GroupTable        read_group(json const& j);
  FiniteGroupoid    read_groupoid(json const& j);
  RestrictionSystem read_system(json const& j);
  BiBandAlgebra     read_algebra(json const& j);
  GroupAction       read_action(json const& j);

  //! Parses text; throws Error(malformed_input) with the parser message.
  json parse(std::string const& text);

}  // namespace skewind::json_io

#endif  // SKEWIND_JSON_IO_HPP_
