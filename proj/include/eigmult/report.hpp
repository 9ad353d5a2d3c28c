#pragma once

#include "eigmult/eigenvariety.hpp"
#include "eigmult/spectra.hpp"
#include "eigmult/tensor_io.hpp"

namespace eigmult {

/// Doubles with -0 folded to 0 so equal runs print identical bytes.
Json number_json(double x);
Json complex_json(Complex z);

/// Coefficients in ascending degree; exact ones as "p/q" strings.
Json poly_json(const QPoly& p);
Json poly_json(const UniPoly<double>& p);

/// {"mode","degree","charpoly":[...],"eigs":[{"re","im","am",...}]}
Json spectrum_json(const Spectrum& s);

/// Exact points as Q(i) strings such as "-i" or "3/2+i"; numeric points as
/// {"re","im"} pairs.
Json point_json(const ProjectivePoint& p);

/// {"lambda","gm","kappa","components":[{"dim","point"|"factor"}],...}
Json eigenvariety_json(const EigenvarietyReport& r);

}  // namespace eigmult
