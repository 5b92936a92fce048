#pragma once

#include <string>

#include "bernstein/bandlimited.hpp"
#include "bernstein/discrete_hardy.hpp"
#include "bernstein/hankel.hpp"
#include "bernstein/projection.hpp"

namespace bernstein::io {

/// Lattice samples: CSV `n,re,im` plus JSON sidecar `<path>.json`
/// holding {"kappa":, "alpha":, "N":}.
SampledBandlimited read_samples(const std::string& csv_path);
void write_samples(const std::string& csv_path, const SampledBandlimited& s);

/// Plain sequences: CSV `n,re,im` (no sidecar).
FiniteSequence read_sequence(const std::string& csv_path);
void write_sequence(const std::string& csv_path, const FiniteSequence& a);

/// Grid functions: CSV `x,re,im` plus sidecar
/// {"h":, "T":, "tail":{"kind":"none"|"bounded_by"|"decay_quadratic","constant":}}.
GridFunction read_grid(const std::string& csv_path);
void write_grid(const std::string& csv_path, const GridFunction& g);

/// Matrix export: CSV `j,k,re,im`.
void write_matrix(const std::string& csv_path, const HankelMatrix& M);

/// Symbol spec: JSON {"kind":"trig","terms":[[freq,re,im],...]} or
/// {"kind":"grid","csv":"<path>"} referring to a grid CSV + sidecar.
SymbolSpec read_symbol(const std::string& json_path);

}  // namespace bernstein::io
