// Regenerates the JSON fixtures under fixtures/. Usage: bohr_make_fixtures <dir>

#include <fstream>
#include <iostream>
#include <string>

#include "bohr/bohr.hpp"
#include "bohr/fixtures.hpp"
#include "bohr/io.hpp"

namespace {

using bohr::io::json;

void write(const std::string& dir, const std::string& name, const json& j) {
  std::ofstream out(dir + "/" + name);
  if (!out) throw std::runtime_error("cannot write " + dir + "/" + name);
  out << j.dump(2) << '\n';
}

json seeds_json(const std::vector<bohr::Context>& seeds, std::size_t n) {
  json arr = json::array();
  for (const auto& c : seeds) arr.push_back(bohr::io::context_to_json(c));
  return {{"n", n}, {"seeds", std::move(arr)}};
}

void emit_poset(const std::string& dir, const std::string& stem, const std::string& poset_name,
                const std::vector<bohr::Context>& seeds, std::size_t n) {
  write(dir, stem + "_seeds.json", seeds_json(seeds, n));
  write(dir, poset_name, bohr::io::poset_to_json(bohr::build_poset(seeds, n)));
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: bohr_make_fixtures <dir>\n";
    return 2;
  }
  const std::string dir = argv[1];
  namespace fx = bohr::fixtures;

  emit_poset(dir, "chain2", "chain2.json", {bohr::sphere_context(1, 0, 0)}, 2);
  emit_poset(dir, "m2_star", "m2_star.json",
             {bohr::sphere_context(1, 0, 0), bohr::sphere_context(0, 1, 0), bohr::sphere_context(0, 0, 1)}, 2);
  emit_poset(dir, "chain3", "chain3.json", {fx::block3(), fx::diagonal3()}, 3);
  emit_poset(dir, "m3", "m3_fixture.json", fx::m3_seeds(), 3);

  write(dir, "m3_example.json", bohr::io::sigma_to_json(fx::m3_example(fx::m3_fixture()), "m3_fixture.json"));
  const auto chain3 = fx::chain3();
  write(dir, "chain3_chi_d2.json", bohr::io::sigma_to_json(bohr::chi_up(fx::block3(), chain3), "chain3.json"));
  write(dir, "chain3_example.json", bohr::io::sigma_to_json(fx::m3_example(chain3), "chain3.json"));

  write(dir, "state_e3.json", bohr::io::state_to_json(bohr::State(bohr::CMatrix::diag({0, 0, 1}))));
  write(dir, "state_mixed3.json",
        bohr::io::state_to_json(bohr::State(bohr::CMatrix::diag({bohr::Rational(1, 2), bohr::Rational(1, 3), bohr::Rational(1, 6)}))));
  write(dir, "observable_diag221.json", bohr::io::matrix_to_json(bohr::CMatrix::diag({2, 2, 1})));
  write(dir, "open_above_3_2.json", bohr::io::open_to_json(bohr::RationalOpen::interval(bohr::Rational(3, 2), std::nullopt)));

  auto rayset = [&](const std::string& name, const bohr::RaySet& rs, const std::string& description) {
    json j = bohr::io::rayset_to_json(rs);
    j["description"] = description;
    write(dir, name, j);
  };
  rayset("cabello18.json", fx::cabello18(),
         "18 rays / 9 bases in dimension 4, entries in {0,+-1}, every ray in exactly two bases "
         "(Cabello, Estebaranz, Garcia-Alcaine, Phys. Lett. A 212 (1996) 183). Odd number of bases, "
         "even incidence count: no valuation.");
  rayset("cube3.json", fx::rational_cube3(),
         "Dimension 3: rays with coordinates in {0,+-1,+-2} plus cross-product completions of their "
         "orthogonal pairs; all orthogonal triads as bases. Contains the Conway-Kochen 31-ray set.");
  rayset("qubit_single.json", fx::qubit_single(), "One orthonormal basis of C^2.");
  rayset("qubit_axes.json", fx::qubit_axes(), "Eigenbases of the three Pauli matrices; no shared rays.");
  rayset("qubit_pythagorean.json", fx::qubit_pythagorean(), "Two real rational bases of C^2.");
  return 0;
}
