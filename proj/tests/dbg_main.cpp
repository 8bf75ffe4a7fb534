#include <iostream>

#include "ginv/catalog.hpp"
#include "ginv/invariants.hpp"
#include "ginv/predicates.hpp"

using namespace ginv;

int main(int argc, char** argv) {
  std::string name = argv[1];
  std::string stage = argc > 2 ? argv[2] : "all";
  auto g = build(name);
  std::cout << "built " << g->name() << " order " << g->order() << std::endl;
  if (stage == "build") return 0;
  std::cout << "classes " << g->classes().size() << " real " << g->real_classes().size() << std::endl;
  std::cout << "a_G = " << laitinen_number(*g) << std::endl;
  if (stage == "a") return 0;
  std::cout << "normals: ";
  for (auto& n : normal_subgroups(*g)) std::cout << n.order() << " ";
  std::cout << std::endl;
  if (stage == "normals") return 0;
  std::cout << "oliver " << is_oliver(*g).oliver << std::endl;
  if (stage == "oliver") return 0;
  auto rep = invariant_report(*g);
  std::cout << "btable rows " << rep.b_table.size() << std::endl;
  return 0;
}
