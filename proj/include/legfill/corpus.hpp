#pragma once

#include <optional>
#include <string>
#include <vector>

#include "legfill/braid.hpp"
#include "legfill/cobordism.hpp"
#include "legfill/front.hpp"

namespace legfill {

struct Fixture {
  std::string label;
  std::string description;
  BraidWord braid;
  BandPresentation bands;
  OrientedFront front;
  // Hand-built filling script from the empty front, if the entry has one.
  std::optional<std::vector<Move>> script;
};

std::vector<std::string> corpus_list();
// Throws UnknownLabel.
Fixture corpus_get(const std::string& label);

}  // namespace legfill
