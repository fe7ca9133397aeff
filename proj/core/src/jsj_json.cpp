#include <json.hpp>

#include "knotgt/jsj.hpp"

namespace knotgt::jsj {

std::string classification_json(const JsjTree& tree, const Classification& c) {
  nlohmann::ordered_json out;
  out["name"] = tree.name;
  out["is_R"] = c.is_R;
  out["is_Rbar"] = c.is_Rbar;
  out["has_order_two_gt"] = c.has_order_two_gt;
  out["has_any_gt"] = c.has_any_gt == GtKnowledge::Yes ? "yes" : "unknown";
  nlohmann::ordered_json witnesses = nlohmann::ordered_json::array();
  for (const PieceWitness& w : c.witnesses) {
    nlohmann::ordered_json entry;
    entry["piece"] = w.piece;
    entry["element"] = seifert::to_text(w.certificate.element);
    entry["conjugator"] = seifert::to_text(w.certificate.conjugator);
    witnesses.push_back(std::move(entry));
  }
  out["witnesses"] = std::move(witnesses);
  return out.dump(2) + "\n";
}

}  // namespace knotgt::jsj
