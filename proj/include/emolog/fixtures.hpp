#ifndef EMOLOG_FIXTURES_HPP
#define EMOLOG_FIXTURES_HPP

#include <string>
#include <vector>

#include "emolog/model.hpp"

namespace emolog {

// Built-in example models. Names resolve before file paths everywhere a
// command takes a model argument.
//
//   gift               two co-authors, a mailed gift and a thank-you note;
//                      four worlds, shared preferences
//   battle             coordination game, two diners picking restaurants;
//                      preferences induced from the payoff table
//   battle-util        same game with the raw payoffs kept as utilities
//   lottery            three ticket holders, exactly one winning world
//   undef-left         three-world pair that agrees on every sadness-free
//   undef-right        formula yet disagrees on "S[a] p" at w1; the right
//                      model has an empty preference order
//   battle-good-broad  battle worlds with both diagonal outcomes good
//   battle-good-strict battle worlds, each diner's own favorite outcome good
//
// All fixtures pass validation.

struct FixtureInfo {
    std::string name;
    std::string description;
};

std::vector<FixtureInfo> fixture_list();

bool is_fixture(const std::string& name);

EpistemicModel fixture(const std::string& name); // throws Error on unknown name

} // namespace emolog

#endif
