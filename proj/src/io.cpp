#include "bernstein/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace bernstein::io {

namespace {

using nlohmann::json;

struct CsvRow {
  double a, b, c;
};

std::vector<CsvRow> read_csv3(const std::string& path, const std::string& expect_header) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) throw InputError(path + ": empty file");
  // Tolerate trailing CR from foreign line endings.
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != expect_header)
    throw InputError(path + ": expected header '" + expect_header + "', got '" + line + "'");
  std::vector<CsvRow> rows;
  size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream ss(line);
    CsvRow r{};
    char c1 = 0, c2 = 0;
    if (!(ss >> r.a >> c1 >> r.b >> c2 >> r.c) || c1 != ',' || c2 != ',')
      throw InputError(path + ": malformed row at line " + std::to_string(lineno));
    rows.push_back(r);
  }
  return rows;
}

json read_sidecar(const std::string& csv_path) {
  const std::string side = csv_path + ".json";
  std::ifstream in(side);
  if (!in) throw InputError("cannot open sidecar " + side);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InputError(side + ": " + e.what());
  }
  return j;
}

std::vector<cplx> rows_to_indexed(const std::string& path, const std::vector<CsvRow>& rows,
                                  int N) {
  std::vector<cplx> v(size_t(2 * N + 1));
  std::vector<bool> seen(v.size(), false);
  for (const CsvRow& r : rows) {
    const long n = std::lround(r.a);
    if (n < -N || n > N) throw InputError(path + ": index outside window");
    v[size_t(n + N)] = cplx(r.b, r.c);
    seen[size_t(n + N)] = true;
  }
  for (bool s : seen)
    if (!s) throw InputError(path + ": missing rows for some indices in the window");
  return v;
}

}  // namespace

SampledBandlimited read_samples(const std::string& csv_path) {
  const json meta = read_sidecar(csv_path);
  try {
    const double kappa = meta.at("kappa").get<double>();
    const double alpha = meta.at("alpha").get<double>();
    const int N = meta.at("N").get<int>();
    auto rows = read_csv3(csv_path, "n,re,im");
    return SampledBandlimited(Band(kappa), LatticeOffset(alpha), N,
                              rows_to_indexed(csv_path, rows, N));
  } catch (const json::exception& e) {
    throw InputError(csv_path + ".json: " + e.what());
  }
}

void write_samples(const std::string& csv_path, const SampledBandlimited& s) {
  std::ofstream out(csv_path);
  if (!out) throw InputError("cannot write " + csv_path);
  out.precision(17);
  out << "n,re,im\n";
  for (int n = -s.window; n <= s.window; ++n)
    out << n << ',' << s.coeff(n).real() << ',' << s.coeff(n).imag() << '\n';
  json meta{{"kappa", s.band.kappa}, {"alpha", s.offset.alpha}, {"N", s.window}};
  std::ofstream side(csv_path + ".json");
  side << meta.dump(2) << '\n';
}

FiniteSequence read_sequence(const std::string& csv_path) {
  auto rows = read_csv3(csv_path, "n,re,im");
  long N = 0;
  for (const CsvRow& r : rows) N = std::max(N, std::labs(std::lround(r.a)));
  FiniteSequence a = FiniteSequence::zero(int(N));
  for (const CsvRow& r : rows) a.at(int(std::lround(r.a))) = cplx(r.b, r.c);
  return a;
}

void write_sequence(const std::string& csv_path, const FiniteSequence& a) {
  std::ofstream out(csv_path);
  if (!out) throw InputError("cannot write " + csv_path);
  out.precision(17);
  out << "n,re,im\n";
  for (int n = -a.window; n <= a.window; ++n)
    out << n << ',' << a.at(n).real() << ',' << a.at(n).imag() << '\n';
}

GridFunction read_grid(const std::string& csv_path) {
  const json meta = read_sidecar(csv_path);
  try {
    const double h = meta.at("h").get<double>();
    const double T = meta.at("T").get<double>();
    TailModel tail = TailModel::none();
    if (meta.contains("tail")) {
      const std::string kind = meta["tail"].at("kind").get<std::string>();
      const double c = meta["tail"].value("constant", 0.0);
      if (kind == "none")
        tail = TailModel::none();
      else if (kind == "bounded_by")
        tail = TailModel::bounded_by(c);
      else if (kind == "decay_quadratic")
        tail = TailModel::decay_quadratic(c);
      else
        throw InputError(csv_path + ".json: unknown tail kind '" + kind + "'");
    }
    auto rows = read_csv3(csv_path, "x,re,im");
    const long K = std::lround(T / h);
    if (long(rows.size()) != 2 * K + 1)
      throw InputError(csv_path + ": row count does not match h and T");
    std::vector<cplx> v(rows.size());
    for (const CsvRow& r : rows) {
      const long k = std::lround(r.a / h);
      if (k < -K || k > K) throw InputError(csv_path + ": x outside the declared extent");
      v[size_t(k + K)] = cplx(r.b, r.c);
    }
    return GridFunction(h, T, std::move(v), tail);
  } catch (const json::exception& e) {
    throw InputError(csv_path + ".json: " + e.what());
  }
}

void write_grid(const std::string& csv_path, const GridFunction& g) {
  std::ofstream out(csv_path);
  if (!out) throw InputError("cannot write " + csv_path);
  out.precision(17);
  out << "x,re,im\n";
  const int K = g.half_points();
  for (int k = -K; k <= K; ++k)
    out << k * g.h << ',' << g.at(k).real() << ',' << g.at(k).imag() << '\n';
  json tail;
  switch (g.tail.kind) {
    case TailModel::Kind::None:
      tail = {{"kind", "none"}};
      break;
    case TailModel::Kind::BoundedBy:
      tail = {{"kind", "bounded_by"}, {"constant", g.tail.constant}};
      break;
    case TailModel::Kind::DecayQuadratic:
      tail = {{"kind", "decay_quadratic"}, {"constant", g.tail.constant}};
      break;
  }
  json meta{{"h", g.h}, {"T", g.T}, {"tail", tail}};
  std::ofstream side(csv_path + ".json");
  side << meta.dump(2) << '\n';
}

void write_matrix(const std::string& csv_path, const HankelMatrix& M) {
  std::ofstream out(csv_path);
  if (!out) throw InputError("cannot write " + csv_path);
  out.precision(17);
  out << "j,k,re,im\n";
  const int N = M.window;
  for (int j = -N; j <= N; ++j)
    for (int k = -N; k <= N; ++k)
      out << j << ',' << k << ',' << M.entries(j + N, k + N).real() << ','
          << M.entries(j + N, k + N).imag() << '\n';
}

SymbolSpec read_symbol(const std::string& json_path) {
  std::ifstream in(json_path);
  if (!in) throw InputError("cannot open " + json_path);
  json j;
  try {
    in >> j;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "trig") {
      std::vector<std::pair<double, cplx>> terms;
      for (const auto& t : j.at("terms")) {
        if (!t.is_array() || t.size() != 3)
          throw InputError(json_path + ": trig terms must be [freq,re,im] triples");
        terms.emplace_back(t[0].get<double>(),
                           cplx(t[1].get<double>(), t[2].get<double>()));
      }
      return SymbolSpec::trig(std::move(terms));
    }
    if (kind == "grid") {
      std::string csv = j.at("csv").get<std::string>();
      // Relative grid paths resolve next to the symbol file.
      const auto base = std::filesystem::path(json_path).parent_path();
      if (!csv.empty() && !std::filesystem::path(csv).is_absolute())
        csv = (base / csv).string();
      GridFunction g = read_grid(csv);
      if (j.contains("spectrum")) {
        const auto& s = j["spectrum"];
        return SymbolSpec::from_grid(std::move(g), s.at(0).get<double>(),
                                     s.at(1).get<double>());
      }
      return SymbolSpec::from_grid(std::move(g));
    }
    throw InputError(json_path + ": unknown symbol kind '" + kind + "'");
  } catch (const json::exception& e) {
    throw InputError(json_path + ": " + e.what());
  }
}

}  // namespace bernstein::io
