// Prints every registered distance and similarity between two soft sets.
//
//   compare_soft_sets               uses the built-in ABC / XYZ pair
//   compare_soft_sets a.ss b.ss     loads both from files

#include <iomanip>
#include <iostream>

#include "softsim/softsim.hpp"

int main(int argc, char** argv) {
  using namespace softsim;
  try {
    SoftSet f = worked::financial_example().f;
    SoftSet g = worked::financial_example().g;
    if (argc == 3) {
      f = load_soft_set(argv[1]).softset;
      g = load_soft_set(argv[2]).softset;
    } else if (argc != 1) {
      std::cerr << "usage: compare_soft_sets [a.ss b.ss]\n";
      return 2;
    }
    require_same_space(f, g);

    for (MeasureKind kind : {MeasureKind::Distance, MeasureKind::Similarity}) {
      std::cout << (kind == MeasureKind::Distance ? "distances\n" : "similarities\n");
      for (MeasureId id : all_measures(kind)) {
        std::cout << "  " << std::left << std::setw(12) << measure_name(id);
        try {
          const MeasureValue v = evaluate(id, f, g);
          if (v.exact) {
            std::cout << std::setw(12) << v.decimal(6) << v.exact->str() << '\n';
          } else {
            std::cout << v.decimal(6) << '\n';
          }
        } catch (const Error& e) {
          std::cout << "n/a (" << e.what() << ")\n";
        }
      }
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
