#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "deca/chains.hpp"
#include "deca/loopgroup.hpp"
#include "deca/sgroup.hpp"
#include "deca/sset.hpp"
#include "deca/bisset.hpp"

namespace deca {

using Json = nlohmann::json;

// Interchange formats. Object keys are emitted sorted; operator tables are
// id -> id maps so files diff cleanly. Readers throw Error on missing or
// ill-typed fields and name the offending path.
//
//   sset    {"kind":"sset","truncation":N,"levels":[[ids],...],
//            "face":[[{id:id},...],...],"deg":[...]}        face[0] == []
//   bisset  {"kind":"bisset","P":p,"Q":q,"cells":{"m,n":[ids]},
//            "dh":{"m,n":[{id:id},...]},"sh":...,"dv":...,"sv":...}
//   sgroup  {"kind":"sgroup","levels":[{"elements":[...],"identity":e,
//            "mul":[[...]]}],"faces":[...],"degs":[...]}    faces[0] == []
//   psgroup {"kind":"psgroup","levels":[{"gens":[...],"rels":[[...]]}],
//            "faces":[[[word]...]...],"degs":[...]}         signed 1-based
//   fpgroup {"kind":"fpgroup","gens":[...],"rels":[[...]]}
//   ptcp    {"kind":"ptcp","group":...,"total":...,"base":...,
//            "proj":[[...]],"action":[[[...]]],"section":[[...]]}
//   chain   {"kind":"chain","top":t,"trusted":r,"ranks":[...],
//            "boundary":[matrix...]}
//   matrix  {"rows":r,"cols":c,"data":[row-major entries]}

Json to_json(const SimplicialSet& X);
SimplicialSet sset_from_json(const Json& j);

Json to_json(const BisimplicialSet& B);
BisimplicialSet bisset_from_json(const Json& j);

Json to_json(const SimplicialGroup& G);
SimplicialGroup sgroup_from_json(const Json& j);

Json to_json(const FpGroup& F);
FpGroup fpgroup_from_json(const Json& j);

Json to_json(const PresentedSimplicialGroup& G);
PresentedSimplicialGroup psgroup_from_json(const Json& j);

Json to_json(const Ptcp& P);
Ptcp ptcp_from_json(const Json& j);

Json to_json(const IntMat& A);
IntMat intmat_from_json(const Json& j);

Json to_json(const ChainComplex& C);
ChainComplex chain_from_json(const Json& j);

Json to_json(const ChainMap& f);
ChainMap chainmap_from_json(const Json& j);

// "kind" field, or "" when absent
std::string json_kind(const Json& j);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace deca
