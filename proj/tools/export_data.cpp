// Writes the shipped example documents (one JSON file per triple and per
// quasilattice) into the directory given as the only argument.

#include <fstream>
#include <iostream>

#include "qtk/catalog.hpp"
#include "qtk/io.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: qtk_export_data DIR\n";
    return 1;
  }
  const std::string dir = argv[1];
  auto write = [&](const std::string& name, const qtk::io::Json& j) {
    std::ofstream out(dir + "/" + name + ".json", std::ios::binary);
    out << qtk::io::dump(j);
    return static_cast<bool>(out);
  };
  bool ok = true;
  for (const auto& n : qtk::catalog::triple_names()) ok &= write(n, qtk::io::to_json(qtk::catalog::triple_by_name(n)));
  for (const auto& n : qtk::catalog::lattice_names())
    ok &= write(n, qtk::io::to_json(qtk::catalog::lattice_by_name(n), n));
  return ok ? 0 : 1;
}
