#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bernstein/acceptance.hpp"
#include "bernstein/bandlimited.hpp"
#include "bernstein/discrete_hardy.hpp"
#include "bernstein/dual_map.hpp"
#include "bernstein/hankel.hpp"
#include "bernstein/io.hpp"
#include "bernstein/numerics.hpp"
#include "bernstein/projection.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace bernstein;

constexpr const char* kVersion = "1.0.0";

struct Output {
  std::string path;      // empty -> stdout
  std::string format = "json";
  bool timing = false;
};

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx parse_complex(const std::string& s) {
  std::istringstream ss(s);
  double re = 0.0, im = 0.0;
  char comma = 0;
  if (!(ss >> re)) throw InputError("cannot parse complex value '" + s + "'");
  if (ss >> comma) {
    if (comma != ',' || !(ss >> im))
      throw InputError("complex values are 're' or 're,im', got '" + s + "'");
  }
  return {re, im};
}

void flatten_csv(const json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items())
      flatten_csv(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array()) {
    for (size_t i = 0; i < j.size(); ++i)
      flatten_csv(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << prefix << ',' << j.dump() << '\n';
  }
}

void emit(const Output& o, json report, double elapsed_s) {
  report["schema"] = 1;
  report["version"] = kVersion;
  if (o.timing) report["elapsed_seconds"] = elapsed_s;
  std::ostringstream body;
  if (o.format == "csv") {
    body << "key,value\n";
    flatten_csv(report, "", body);
  } else {
    body << report.dump(2) << '\n';
  }
  if (o.path.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream f(o.path);
    if (!f) throw InputError("cannot write " + o.path);
    f << body.str();
  }
}

void add_output_flags(CLI::App* cmd, Output& o) {
  cmd->add_option("--out", o.path, "Write the report here instead of stdout");
  cmd->add_option("--format", o.format, "Report format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  cmd->add_flag("--timing", o.timing,
                "Include wall time in the report (off by default so reports are "
                "bit-for-bit reproducible)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical lab for bandlimited duality: sampling, discrete transforms, "
               "band projections, synthesis maps and truncated Hankel operators"};
  app.require_subcommand(1);

  // --- interp ---------------------------------------------------------------
  auto* interp = app.add_subcommand("interp", "Evaluate a sampled bandlimited function");
  struct {
    std::string samples;
    std::vector<std::string> zs;
    Output out;
  } interp_a;
  interp->add_option("--samples", interp_a.samples, "Samples CSV (with .json sidecar)")
      ->required();
  interp->add_option("--z", interp_a.zs, "Evaluation point 're' or 're,im' (repeatable)")
      ->required();
  add_output_flags(interp, interp_a.out);

  // --- project ----------------------------------------------------------------
  auto* project = app.add_subcommand("project", "Band-limiting projections of a grid symbol");
  struct {
    std::string grid;
    std::string mode = "l2";
    double kappa = std::numbers::pi;
    int N = -1;
    double R = 5.0;
    std::vector<std::string> zs;
    std::string samples_out;
    Output out;
  } project_a;
  project->add_option("--grid", project_a.grid, "Grid CSV (with .json sidecar)")->required();
  project->add_option("--mode", project_a.mode, "l2 (orthogonal) or linf (modulo edge span)")
      ->check(CLI::IsMember({"l2", "linf"}))
      ->capture_default_str();
  project->add_option("--kappa", project_a.kappa, "Band width")->capture_default_str();
  project->add_option("--N", project_a.N, "Output window (l2 mode; -1 = fit the grid)")
      ->capture_default_str();
  project->add_option("--R", project_a.R, "Evaluation radius (linf mode)")
      ->capture_default_str();
  project->add_option("--z", project_a.zs, "Evaluation points (linf mode, repeatable)");
  project->add_option("--samples-out", project_a.samples_out,
                      "Also write the l2 projection as a samples CSV");
  add_output_flags(project, project_a.out);

  // --- bmo -------------------------------------------------------------------
  auto* bmo = app.add_subcommand("bmo", "Mean-oscillation norm of a grid function");
  struct {
    std::string grid;
    Output out;
  } bmo_a;
  bmo->add_option("--grid", bmo_a.grid, "Grid CSV")->required();
  add_output_flags(bmo, bmo_a.out);

  // --- bmoz ------------------------------------------------------------------
  auto* bmoz = app.add_subcommand("bmoz", "Discrete mean-oscillation norm of a sequence");
  struct {
    std::string seq;
    Output out;
  } bmoz_a;
  bmoz->add_option("--seq", bmoz_a.seq, "Sequence CSV (n,re,im)")->required();
  add_output_flags(bmoz, bmoz_a.out);

  // --- dhilbert ----------------------------------------------------------------
  auto* dh = app.add_subcommand("dhilbert", "Shifted discrete Hilbert transform");
  struct {
    std::string seq;
    double alpha = 0.0;
    int M = -1;
    std::string seq_out;
    Output out;
  } dh_a;
  dh->add_option("--seq", dh_a.seq, "Sequence CSV")->required();
  dh->add_option("--alpha", dh_a.alpha, "Lattice offset in [0,1)")->capture_default_str();
  dh->add_option("--M", dh_a.M, "Output window (-1 = half the input window)")
      ->capture_default_str();
  dh->add_option("--seq-out", dh_a.seq_out, "Write the transform as a sequence CSV");
  add_output_flags(dh, dh_a.out);

  // --- talpha ------------------------------------------------------------------
  auto* ta = app.add_subcommand("talpha", "Synthesis map of a sequence");
  struct {
    std::string seq;
    double alpha = 0.0;
    std::vector<std::string> zs;
    Output out;
  } ta_a;
  ta->add_option("--seq", ta_a.seq, "Sequence CSV")->required();
  ta->add_option("--alpha", ta_a.alpha, "Lattice offset in [0,1)")->capture_default_str();
  ta->add_option("--z", ta_a.zs, "Evaluation point (repeatable)")->required();
  add_output_flags(ta, ta_a.out);

  // --- pairing -------------------------------------------------------------------
  auto* pairing = app.add_subcommand("pairing", "Discrete duality pairing");
  struct {
    std::string h, f;
    double alpha = 0.0;
    Output out;
  } pairing_a;
  // Frees the single-letter h for the option below.
  pairing->set_help_flag("--help", "Print this help message and exit");
  pairing->add_option("--h", pairing_a.h, "Samples CSV of the summable-side function")
      ->required();
  pairing->add_option("--f", pairing_a.f, "Samples CSV of the dual-side function")->required();
  pairing->add_option("--alpha", pairing_a.alpha, "Pairing lattice offset")
      ->capture_default_str();
  add_output_flags(pairing, pairing_a.out);

  // --- clark ---------------------------------------------------------------------
  auto* clark = app.add_subcommand("clark", "Lattice measure and its weighted norm");
  struct {
    std::string f;
    double alpha = 0.0;
    Output out;
  } clark_a;
  clark->add_option("--f", clark_a.f, "Samples CSV (kappa = pi)")->required();
  clark->add_option("--alpha", clark_a.alpha, "Lattice offset")->capture_default_str();
  add_output_flags(clark, clark_a.out);

  // --- hankel ----------------------------------------------------------------------
  auto* hankel = app.add_subcommand("hankel", "Assemble a truncated Hankel operator");
  struct {
    std::string symbol;
    double kappa = std::numbers::pi / 2.0;
    int N = 8;
    int sigmas = 8;
    std::string matrix_out;
    bool reduce = false;
    Output out;
  } hankel_a;
  hankel->add_option("--symbol", hankel_a.symbol, "Symbol JSON")->required();
  hankel->add_option("--kappa", hankel_a.kappa, "Band width")->capture_default_str();
  hankel->add_option("--N", hankel_a.N, "Window")->capture_default_str();
  hankel->add_option("--sigmas", hankel_a.sigmas, "How many singular values to report")
      ->capture_default_str();
  hankel->add_option("--matrix-out", hankel_a.matrix_out, "Write entries as CSV");
  hankel->add_flag("--band-reduce", hankel_a.reduce, "Clip the symbol spectrum first");
  add_output_flags(hankel, hankel_a.out);

  // --- rochberg -----------------------------------------------------------------------
  auto* rochberg = app.add_subcommand("rochberg", "Cutoff split of a symbol and its norms");
  struct {
    std::string symbol;
    double kappa = std::numbers::pi / 2.0;
    Output out;
  } rochberg_a;
  rochberg->add_option("--symbol", rochberg_a.symbol, "Symbol JSON (trig)")->required();
  rochberg->add_option("--kappa", rochberg_a.kappa, "Band width")->capture_default_str();
  add_output_flags(rochberg, rochberg_a.out);

  // --- vmo ----------------------------------------------------------------------------
  auto* vmo = app.add_subcommand("vmo", "Small-scale oscillation profile of a grid function");
  struct {
    std::string grid;
    std::vector<double> deltas;
    Output out;
  } vmo_a;
  vmo->add_option("--grid", vmo_a.grid, "Grid CSV")->required();
  vmo->add_option("--delta", vmo_a.deltas, "Scale (repeatable)")->required();
  add_output_flags(vmo, vmo_a.out);

  // --- atoms -----------------------------------------------------------------------------
  auto* atoms = app.add_subcommand("atoms", "Validate an atom and synthesize its function");
  struct {
    std::vector<int> support;
    std::vector<std::string> values;
    std::string samples_out;
    Output out;
  } atoms_a;
  atoms->add_option("--support", atoms_a.support, "Support indices (contiguous)")->required();
  atoms->add_option("--value", atoms_a.values, "Atom value 're' or 're,im' per index")
      ->required();
  atoms->add_option("--samples-out", atoms_a.samples_out,
                    "Write the synthesized function as a samples CSV");
  add_output_flags(atoms, atoms_a.out);

  // --- suite -------------------------------------------------------------------------------
  auto* suite = app.add_subcommand("suite", "Run the end-to-end acceptance checks");
  struct {
    std::string level = "fast";
    Output out;
  } suite_a;
  suite->add_option("--level", suite_a.level, "fast or full")
      ->check(CLI::IsMember({"fast", "full"}))
      ->capture_default_str();
  add_output_flags(suite, suite_a.out);

  CLI11_PARSE(app, argc, argv);

  const auto t0 = std::chrono::steady_clock::now();
  auto elapsed = [&t0]() {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  };

  try {
    if (interp->parsed()) {
      const SampledBandlimited s = io::read_samples(interp_a.samples);
      json values = json::array();
      for (const std::string& zs : interp_a.zs) {
        const cplx z = parse_complex(zs);
        values.push_back({{"z", complex_json(z)}, {"value", complex_json(interpolate(s, z))}});
      }
      emit(interp_a.out,
           {{"command", "interp"},
            {"kappa", s.band.kappa},
            {"alpha", s.offset.alpha},
            {"N", s.window},
            {"norm", pw_norm(s)},
            {"values", values}},
           elapsed());
    } else if (project->parsed()) {
      const GridFunction g = io::read_grid(project_a.grid);
      if (project_a.mode == "l2") {
        const SampledBandlimited s = project_l2(g, Band(project_a.kappa), project_a.N);
        if (!project_a.samples_out.empty()) io::write_samples(project_a.samples_out, s);
        json coeffs = json::array();
        for (int n = -s.window; n <= s.window; ++n)
          coeffs.push_back(complex_json(s.coeff(n)));
        emit(project_a.out,
             {{"command", "project"},
              {"mode", "l2"},
              {"kappa", project_a.kappa},
              {"N", s.window},
              {"norm", pw_norm(s)},
              {"coefficients", coeffs}},
             elapsed());
      } else {
        if (project_a.zs.empty())
          throw InputError("project --mode linf needs at least one --z");
        std::vector<cplx> zs;
        for (const std::string& zstr : project_a.zs) zs.push_back(parse_complex(zstr));
        const std::vector<cplx> vals = project_linf(g, zs, project_a.R);
        json values = json::array();
        for (size_t i = 0; i < zs.size(); ++i)
          values.push_back({{"z", complex_json(zs[i])}, {"value", complex_json(vals[i])}});
        emit(project_a.out,
             {{"command", "project"}, {"mode", "linf"}, {"R", project_a.R}, {"values", values}},
             elapsed());
      }
    } else if (bmo->parsed()) {
      const BmoEstimate e = bmo_r_norm(io::read_grid(bmo_a.grid));
      emit(bmo_a.out,
           {{"command", "bmo"},
            {"value", e.value},
            {"finest_scale", e.finest_scale},
            {"coarsest_scale", e.coarsest_scale}},
           elapsed());
    } else if (bmoz->parsed()) {
      const FiniteSequence a = io::read_sequence(bmoz_a.seq);
      const WindowedValue sum = summability_check(a);
      emit(bmoz_a.out,
           {{"command", "bmoz"},
            {"value", bmo_z_norm(a)},
            {"summability", sum.value},
            {"summability_last_octave", sum.last_octave}},
           elapsed());
    } else if (dh->parsed()) {
      const FiniteSequence a = io::read_sequence(dh_a.seq);
      const int M = dh_a.M >= 0 ? dh_a.M : std::max(1, a.window / 2);
      const FiniteSequence b = discrete_hilbert(a, LatticeOffset(dh_a.alpha), M);
      if (!dh_a.seq_out.empty()) io::write_sequence(dh_a.seq_out, b);
      const WindowedValue h1 = h1_norm(a, LatticeOffset(dh_a.alpha));
      json values = json::array();
      for (int n = -M; n <= M; ++n) values.push_back(complex_json(b.at(n)));
      emit(dh_a.out,
           {{"command", "dhilbert"},
            {"alpha", dh_a.alpha},
            {"M", M},
            {"h1_norm", h1.value},
            {"h1_last_octave", h1.last_octave},
            {"values", values}},
           elapsed());
    } else if (ta->parsed()) {
      const FiniteSequence a = io::read_sequence(ta_a.seq);
      json values = json::array();
      for (const std::string& zstr : ta_a.zs) {
        const cplx z = parse_complex(zstr);
        values.push_back({{"z", complex_json(z)},
                          {"value", complex_json(t_alpha(a, LatticeOffset(ta_a.alpha), z))}});
      }
      emit(ta_a.out, {{"command", "talpha"}, {"alpha", ta_a.alpha}, {"values", values}},
           elapsed());
    } else if (pairing->parsed()) {
      const SampledBandlimited h = io::read_samples(pairing_a.h);
      const XAlphaElement f(io::read_samples(pairing_a.f));
      const PairingResult r = pairing_discrete(h, f, LatticeOffset(pairing_a.alpha));
      emit(pairing_a.out,
           {{"command", "pairing"},
            {"alpha", pairing_a.alpha},
            {"value", complex_json(r.value)},
            {"last_octave", r.last_octave}},
           elapsed());
    } else if (clark->parsed()) {
      const XAlphaElement f(io::read_samples(clark_a.f));
      const LatticeOffset alpha(clark_a.alpha);
      const ClarkMeasure mu = clark_measure(alpha, f.window());
      emit(clark_a.out,
           {{"command", "clark"},
            {"alpha", clark_a.alpha},
            {"N", f.window()},
            {"total_mass", mu.total_mass()},
            {"weighted_bmo", bmo_clark_norm(f, alpha)},
            {"lattice_bmo", x_alpha_norm(f)}},
           elapsed());
    } else if (hankel->parsed()) {
      SymbolSpec phi = io::read_symbol(hankel_a.symbol);
      const Band band(hankel_a.kappa);
      if (hankel_a.reduce) phi = band_reduce(phi, band);
      const HankelMatrix M = assemble(phi, band, hankel_a.N);
      if (!hankel_a.matrix_out.empty()) io::write_matrix(hankel_a.matrix_out, M);
      std::vector<double> sig = singular_values(M.entries);
      if (int(sig.size()) > hankel_a.sigmas) sig.resize(size_t(hankel_a.sigmas));
      emit(hankel_a.out,
           {{"command", "hankel"},
            {"kappa", hankel_a.kappa},
            {"N", hankel_a.N},
            {"op_norm", op_norm(M)},
            {"asym_residual", M.asym_residual},
            {"singular_values", sig}},
           elapsed());
    } else if (rochberg->parsed()) {
      const SymbolSpec phi = io::read_symbol(rochberg_a.symbol);
      const Band band(rochberg_a.kappa);
      const RochbergSplit split = rochberg_split(band_reduce(phi, band), band);
      const RochbergQuantities q = rochberg_quantities(split, band);
      emit(rochberg_a.out,
           {{"command", "rochberg"},
            {"kappa", rochberg_a.kappa},
            {"q_L", q.q_L},
            {"q_C", q.q_C},
            {"q_R", q.q_R},
            {"sum", q.q_L + q.q_C + q.q_R}},
           elapsed());
    } else if (vmo->parsed()) {
      const GridFunction g = io::read_grid(vmo_a.grid);
      const std::vector<double> prof = vmo_profile(g, vmo_a.deltas);
      json rows = json::array();
      for (size_t i = 0; i < prof.size(); ++i)
        rows.push_back({{"delta", vmo_a.deltas[i]}, {"oscillation", prof[i]}});
      emit(vmo_a.out, {{"command", "vmo"}, {"profile", rows}}, elapsed());
    } else if (atoms->parsed()) {
      if (atoms_a.support.size() != atoms_a.values.size())
        throw InputError("atoms: --support and --value counts differ");
      std::vector<cplx> vals;
      for (const std::string& v : atoms_a.values) vals.push_back(parse_complex(v));
      const DiscreteAtom atom = make_atom(atoms_a.support, vals);
      const SampledBandlimited fn = atom_to_b1(atom);
      if (!atoms_a.samples_out.empty()) io::write_samples(atoms_a.samples_out, fn);
      emit(atoms_a.out,
           {{"command", "atoms"},
            {"valid", true},
            {"support_size", atoms_a.support.size()},
            {"N", fn.window},
            {"norm", pw_norm(fn)}},
           elapsed());
    } else if (suite->parsed()) {
      const bool full = suite_a.level == "full";
      const std::vector<CriterionResult> results = run_acceptance(full);
      json rows = json::array();
      bool all = true;
      for (const CriterionResult& r : results) {
        std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.id << ": " << r.name << " ("
                  << r.detail << ")\n";
        rows.push_back(
            {{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        all = all && r.pass;
      }
      if (!suite_a.out.path.empty())
        emit(suite_a.out, {{"command", "suite"}, {"level", suite_a.level}, {"criteria", rows}},
             elapsed());
      return all ? 0 : 1;
    }
  } catch (const NonConvergence& e) {
    std::cerr << "non-convergence: " << e.what() << '\n';
    return 2;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
