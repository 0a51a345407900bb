#pragma once

#include <string>
#include <vector>

#include "genuskit/string/potential.hpp"
#include "output.hpp"

namespace genuskit::cli {

// A potential given as a JSON file or as inline "2=1,4=2/3" couplings.
struct PotentialSource {
  std::string path;
  std::string couplings;
  bool given() const { return !path.empty() || !couplings.empty(); }
  Potential load() const;
};

Potential load_potential_file(const std::string& path);
Potential parse_inline_couplings(const std::string& text);
nlohmann::json potential_json(const Potential& pot);

// Digits from GENUSKIT_PRECISION, else 50. Throws ParseError on a bad value.
unsigned default_digits();

struct RkOptions {
  PotentialSource source;
  int order = 3;
  bool deformed = false;
  bool generic = false;
};
Document run_rk(const RkOptions& o);

struct FreeEnergyOptions {
  PotentialSource source;
  std::string model;  // quartic, two-valence, sixtic
  int nu = 2;
  bool generic = false;
  int genus = 3;
  unsigned digits = 50;
};
Document run_free_energy(const FreeEnergyOptions& o);

struct CountOptions {
  std::vector<int> valences;
  int max_vertices = 4;  // per valence
  int max_total = -1;    // -1: sum of the per-valence caps
  int genus_max = 4;
};
Document run_count(const CountOptions& o);

struct PhaseOptions {
  std::string model;
  std::vector<std::string> g;
  std::string endpoint_T;  // empty: no endpoint solve
  unsigned digits = 50;
};
Document run_phase(const PhaseOptions& o);

struct PainleveOptions {
  int m = 3;
  std::string rc = "1";
  int tail_terms = 0;
  bool with_y = false;
  int system = -1;  // >= 0: also print the triple-scaling equations 0..system
  unsigned digits = 50;
};
Document run_painleve(const PainleveOptions& o);

struct ValidateOptions {
  PotentialSource source;
  std::vector<int> N{20, 40};
  int orders = 2;
  int resolvent_orders = 3;
  unsigned digits = 50;
};
Document run_validate(const ValidateOptions& o);

}  // namespace genuskit::cli
