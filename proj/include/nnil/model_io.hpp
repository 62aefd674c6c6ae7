#ifndef NNIL_MODEL_IO_HPP
#define NNIL_MODEL_IO_HPP

#include <string>

#include "nnil/kripke.hpp"

namespace nnil {

class UniversalModel;

// Model files: {"vars": [...], "worlds": [...], "order": [[a,b],...],
// "val": {"p1": ["b"], ...}}. "order" may list covers or any relation whose
// closure is a partial order; variables missing from "val" are false
// everywhere. Frames are the same without "vars"/"val".
KripkeModel read_model(const std::string& json_text);
std::string write_model(const KripkeModel& m, int indent = 2);

KripkeFrame read_frame(const std::string& json_text);
std::string write_frame(const KripkeFrame& fr, int indent = 2);

// {"srcWorld": "dstWorld", ...}
NodeMap read_witness(const std::string& json_text);
std::string write_witness(const NodeMap& f, int indent = 2);

// One node per world labeled "id:color", edges = covers.
std::string dot_model(const KripkeModel& m, const std::string& name = "model");

// Each node of T(n) as a boxed miniature tree labeled with its layer;
// cover edges of the <= order between boxes.
std::string dot_universal(const UniversalModel& un);

}  // namespace nnil

#endif
