#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <unistd.h>
#include <fstream>
#include <numbers>
#include <string>

#include "bernstein/io.hpp"

using namespace bernstein;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path dir;
  TempDir() {
    dir = fs::temp_directory_path() / ("bernstein_io_test_" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  ~TempDir() { fs::remove_all(dir); }
  std::string p(const std::string& name) const { return (dir / name).string(); }
};

void write_file(const std::string& path, const std::string& body) {
  std::ofstream f(path);
  f << body;
}

}  // namespace

TEST_CASE("sampled function round trip") {
  TempDir tmp;
  SampledBandlimited s =
      SampledBandlimited::zero(Band(std::numbers::pi / 2.0), LatticeOffset(0.25), 3);
  for (int n = -3; n <= 3; ++n) s.coeff(n) = cplx(0.1 * n, -0.2 * n);
  const std::string path = tmp.p("samples.csv");
  io::write_samples(path, s);
  const SampledBandlimited r = io::read_samples(path);
  CHECK(r.band.kappa == doctest::Approx(s.band.kappa));
  CHECK(r.offset.alpha == doctest::Approx(0.25));
  REQUIRE(r.window == 3);
  for (int n = -3; n <= 3; ++n) CHECK(std::abs(r.coeff(n) - s.coeff(n)) < 1e-15);
}

TEST_CASE("sequence round trip") {
  TempDir tmp;
  FiniteSequence a = FiniteSequence::zero(2);
  a.at(-2) = cplx(1.0, 2.0);
  a.at(1) = cplx(-0.5, 0.0);
  const std::string path = tmp.p("seq.csv");
  io::write_sequence(path, a);
  const FiniteSequence r = io::read_sequence(path);
  REQUIRE(r.window == 2);
  for (int n = -2; n <= 2; ++n) CHECK(std::abs(r.at(n) - a.at(n)) < 1e-15);
}

TEST_CASE("grid round trip preserves the tail model") {
  TempDir tmp;
  const GridFunction g = GridFunction::tabulate(
      0.5, 3.0, [](double x) -> cplx { return cplx(x, -x * x); },
      TailModel::decay_quadratic(2.5));
  const std::string path = tmp.p("grid.csv");
  io::write_grid(path, g);
  const GridFunction r = io::read_grid(path);
  CHECK(r.h == doctest::Approx(0.5));
  CHECK(r.T == doctest::Approx(3.0));
  CHECK(r.tail.kind == TailModel::Kind::DecayQuadratic);
  CHECK(r.tail.constant == doctest::Approx(2.5));
  REQUIRE(r.values.size() == g.values.size());
  for (int k = -6; k <= 6; ++k) CHECK(std::abs(r.at(k) - g.at(k)) < 1e-15);
}

TEST_CASE("matrix export is parseable and complete") {
  TempDir tmp;
  const HankelMatrix M = assemble(SymbolSpec::trig({{0.0, 1.0}}), Band(1.0), 2);
  const std::string path = tmp.p("matrix.csv");
  io::write_matrix(path, M);
  std::ifstream f(path);
  std::string header;
  std::getline(f, header);
  CHECK(header == "j,k,re,im");
  int rows = 0;
  for (std::string line; std::getline(f, line);)
    if (!line.empty()) ++rows;
  CHECK(rows == 25);
}

TEST_CASE("trig symbol JSON") {
  TempDir tmp;
  const std::string path = tmp.p("symbol.json");
  write_file(path, R"({"kind":"trig","terms":[[0.5,1.0,0.0],[-1.2,0.3,-0.4]]})");
  const SymbolSpec phi = io::read_symbol(path);
  CHECK(phi.kind == SymbolSpec::Kind::Trig);
  REQUIRE(phi.terms.size() == 2);
  CHECK(phi.terms[1].first == doctest::Approx(-1.2));
  CHECK(std::abs(phi.terms[1].second - cplx(0.3, -0.4)) < 1e-15);
}

TEST_CASE("grid symbol JSON resolves the CSV next to the JSON") {
  TempDir tmp;
  const GridFunction g = GridFunction::tabulate(
      0.5, 2.0, [](double x) -> cplx { return cplx(std::cos(x), 0.0); },
      TailModel::bounded_by(1.0));
  io::write_grid(tmp.p("sym_grid.csv"), g);
  write_file(tmp.p("symbol.json"),
             R"({"kind":"grid","csv":"sym_grid.csv","spectrum":[-1.0,1.0]})");
  const SymbolSpec phi = io::read_symbol(tmp.p("symbol.json"));
  CHECK(phi.kind == SymbolSpec::Kind::Grid);
  CHECK(phi.has_spectrum);
  CHECK(phi.spectrum_lo == doctest::Approx(-1.0));
  CHECK(phi.spectrum_hi == doctest::Approx(1.0));
  CHECK(std::abs(phi.eval(0.5) - cplx(std::cos(0.5), 0.0)) < 1e-6);
}

TEST_CASE("malformed inputs raise typed errors") {
  TempDir tmp;

  // Missing file.
  CHECK_THROWS_AS(io::read_sequence(tmp.p("nope.csv")), InputError);

  // Bad header.
  write_file(tmp.p("bad_header.csv"), "a,b,c\n0,1,0\n");
  CHECK_THROWS_AS(io::read_sequence(tmp.p("bad_header.csv")), InputError);

  // Non-numeric field.
  write_file(tmp.p("bad_field.csv"), "n,re,im\n0,one,0\n");
  CHECK_THROWS_AS(io::read_sequence(tmp.p("bad_field.csv")), InputError);

  // Gaps in the index set read back as zeros (sequences are dense windows).
  write_file(tmp.p("gap.csv"), "n,re,im\n-1,1,0\n1,2,0\n");
  const FiniteSequence gap = io::read_sequence(tmp.p("gap.csv"));
  CHECK(gap.window == 1);
  CHECK(std::abs(gap.at(0)) == 0.0);

  // Samples with a row missing inside the declared window.
  write_file(tmp.p("hole.csv"), "n,re,im\n-1,1,0\n1,2,0\n");
  write_file(tmp.p("hole.csv.json"), R"({"kappa":3.14,"alpha":0.0,"N":1})");
  CHECK_THROWS_AS(io::read_samples(tmp.p("hole.csv")), InputError);

  // Samples without a sidecar.
  write_file(tmp.p("no_sidecar.csv"), "n,re,im\n0,1,0\n");
  CHECK_THROWS_AS(io::read_samples(tmp.p("no_sidecar.csv")), InputError);

  // Sidecar that is not valid JSON.
  write_file(tmp.p("bad_json.csv"), "n,re,im\n0,1,0\n");
  write_file(tmp.p("bad_json.csv.json"), "{kappa:");
  CHECK_THROWS_AS(io::read_samples(tmp.p("bad_json.csv")), InputError);

  // Unknown symbol kind.
  write_file(tmp.p("bad_kind.json"), R"({"kind":"what"})");
  CHECK_THROWS_AS(io::read_symbol(tmp.p("bad_kind.json")), InputError);
}
