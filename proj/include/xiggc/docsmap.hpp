#pragma once

// Coverage ledger for the source manuscript this library operationalizes.
// Every numbered display in that text gets one row, in order of appearance
// (display-01 .. display-42, numbering align rows individually), plus a few
// load-bearing inline formulas. Each row records where the formula lives
// (line range plus a verbatim anchor fragment so the row can be relocated if
// the text shifts), which operation implements it, which test exercises it,
// and a status:
//   verified     - the display is computed and checked by the named test
//   out-of-scope - nothing computable is asserted beyond rows already present
//   flagged-typo - the display as printed is inconsistent; the row's note
//                  says what is off and what the implementation does instead
// The ledger ships as docs/identity_coverage.csv; a test regenerates the CSV
// from this table and fails on any byte difference, so the two cannot drift.

#include <array>
#include <cstddef>
#include <string>
#include <string_view>

namespace xiggc::docsmap {

struct CoverageEntry {
  std::string_view id;
  std::string_view lines;
  std::string_view anchor;
  std::string_view operation;
  std::string_view test;
  std::string_view status;
  std::string_view note;
};

inline constexpr std::size_t display_count = 42;
inline constexpr std::size_t inline_count = 4;

inline constexpr std::array<CoverageEntry, display_count + inline_count>
    coverage_table{{
        {"display-01", "15-17",
         R"(\xi(s) =  {\scriptstyle \frac{1}{2} }   s(s-1))",
         "specfun::xi_real / specfun::xi_complex",
         "XiReal.MatchesHighPrecisionReferences",
         "verified",
         "evaluated in the pole-absorbed form (s-1)pi^{-s/2}Gamma(1+s/2)zeta(s)"},
        {"display-02", "24-26",
         R"(\xi ( s ) = \xi ( 0)  e^{ b_0 s})",
         "(none)", "(none)", "out-of-scope",
         "kernel-regularized product over complex zeros is not computed; the"
         " equivalent paired real form is covered by display-05/display-06"},
        {"display-03", "32-34",
         R"(E ( \exp ( - s H^\xi_ {\scriptstyle \frac{1}{2} }   )  ))",
         "zeros::hadamard_ratio + sampler::empirical_lt",
         "VerifySampling.EmpiricalTransformCoversAnalyticProduct",
         "verified",
         "transform condition checked in the equivalent s^2 parametrization"},
        {"display-04", "39-41",
         R"(\left ( 1 - \frac{s}{  {\scriptstyle \frac{1}{2} }   + i \tau } \right ))",
         "zeros::hadamard_ratio",
         "HadamardRatio.ReproducesFrozenProducts",
         "verified",
         "conjugate factors multiplied pairwise into the real form of display-05"},
        {"display-05", "43-45",
         R"(\frac{ ( s -  {\scriptstyle \frac{1}{2} }   )^2 + \tau^2 }{  {\scriptstyle \frac{1}{4} }   + \tau^2 })",
         "zeros::hadamard_ratio",
         "HadamardRatio.TailCorrectionShrinksTruncationBias",
         "verified", ""},
        {"display-06", "47-49",
         R"(= \prod_{ \tau > 0 } \frac{\tau^2}{\tau^2 + s^2})",
         "zeros::hadamard_ratio",
         "VerifyHadamard.TruncatedProductTracksXiRatio",
         "verified",
         "truncated at N zeros with the inverse-square tail correction"},
        {"display-07", "51-53",
         R"(= \exp \left \{ \int_0^\infty \log \left ( \frac{z}{z+s^2} \right ) U(dz) \right \})",
         "zeros::ggc_exponent",
         "GgcExponent.ExponentialOfNegativeMatchesHadamardProduct",
         "verified", ""},
        {"display-08", "54",
         R"(= E ( \exp ( - s^2 H^\xi_ {\scriptstyle \frac{1}{2} }   )  ))",
         "harness::verify_frullani + sampler::empirical_lt",
         "VerifyFrullani.ClosedFormPoints",
         "verified",
         "the log-to-integral step is the Frullani check; the expectation form"
         " is the sampling check"},
        {"display-09", "59-61",
         R"(= E \left ( \exp ( -s^2 H_ {\scriptstyle \frac{1}{2} }  ^\xi ) \right ))",
         "sampler::sample_ggc + sampler::empirical_lt",
         "EmpiricalLt.MatchesTruncatedHadamardProductAcrossGrid",
         "verified",
         "empirical transform of simulated sums of exponentials against the"
         " analytic product"},
        {"display-10", "74-76",
         R"(\phi( s ) = \int_{ ( 0 , \infty )} \log ( 1 + s/z ) U( dz ))",
         "zeros::ggc_exponent",
         "GgcExponent.SingleAtomClosedForm",
         "verified", "evaluated for finite truncations of the spectral measure"},
        {"display-11", "90",
         R"(\xi(\alpha + s) &  = ( \alpha -1 + s ))",
         "specfun::xi_real",
         "XiReal.MatchesHighPrecisionReferences",
         "verified", ""},
        {"display-12", "91",
         R"(\xi \left ( \alpha \right )  & =  ( \alpha -1 ))",
         "specfun::xi_real",
         "XiReal.FunctionalEquationHolds",
         "verified", ""},
        {"display-13", "95-98",
         R"(\frac{\xi(\alpha)}{\xi(\alpha+ s)} & =)",
         "harness::verify_theorem1",
         "VerifyTheorem1.PassesOnReferencePoints",
         "verified",
         "main representation; checked to 1e-6 on alpha in {1.5,2,3} x s in"
         " {0.1,0.5,1,2}"},
        {"display-14", "102",
         R"(\nu_\alpha^\Gamma  ( t) &= \frac{1}{\sqrt{2 \pi t}})",
         "nucore::nu_gamma",
         "NuGamma.MatchesIndependentOracles",
         "verified", ""},
        {"display-15", "103",
         R"(\nu^\zeta_\alpha ( t) & =  \frac{1}{\sqrt{2\pi t}} \sum_{n \geq 2})",
         "nucore::nu_zeta",
         "NuZeta.MatchesHighPrecisionTruncatedReference",
         "verified", ""},
        {"display-16", "104",
         R"(\nu^0_\alpha (t) &=  {\scriptstyle \frac{1}{2} }   e^{  {\scriptstyle \frac{1}{2} }   (\alpha-1)^2 t})",
         "nucore::nu_zero",
         "NuZero.ClosedFormAgainstErfcxOracles",
         "verified", "evaluated through erfcx to stay finite for large t"},
        {"display-17", "106-108",
         R"(U_\alpha^\mu (z) =\frac{1}{\sqrt{2 \pi}})",
         "nucore::thorin_kernel",
         "ThorinKernelGamma.LaplaceTransformReproducesNuGamma",
         "verified",
         "Laplace transform of the kernel reproduces each nu component"},
        {"display-18", "112-117",
         R"(\frac{\xi(\alpha+s)  }{\xi(\alpha)}  e^{ -  s \frac{\xi^\prime ( \alpha ) }{\xi ( \alpha  )}  })",
         "harness::verify_theorem1",
         "VerifyTheorem1.PassesOnReferencePoints",
         "verified",
         "three-factor split; each factor also has its own check"
         " (displays 21-28)"},
        {"display-19", "119-121",
         R"(\frac{\xi^\prime}{\xi} \left ( \alpha \right ) = \frac{1}{\alpha-1})",
         "specfun::xi_log_deriv",
         "XiLogDeriv.MatchesHighPrecisionReferences",
         "verified", ""},
        {"display-20", "123-126",
         R"(\zeta_p(s) \mathrel{\mathop:}= p^s/ (p^s - 1))",
         "specfun::zeta + numtheory::mu_zeta_atoms",
         "VerifyEulerRatio.MatchesLogZetaRatio",
         "verified", ""},
        {"display-21", "129-130",
         R"(= \sum_p \sum_{r=1}^\infty \frac{1}{r} p^{- \alpha r} ( e^{-s r \log p } - 1 ))",
         "harness::verify_euler_ratio",
         "VerifyEulerRatio.MatchesLogZetaRatio",
         "verified",
         "prime-power sum truncated at the cutoff with a certified tail bound"},
        {"display-22", "131-132",
         R"(\mu^\zeta ( d x) = \sum_p \sum_{r=1}^\infty (\log p)  \delta_{ r \log p} ( d x))",
         "numtheory::mu_zeta_atoms",
         "MuZetaAtoms.EnumeratesPrimePowersWithLogWeights",
         "verified", ""},
        {"display-23", "136",
         R"(\frac{\zeta(\alpha+s)} {\zeta(\alpha)} e^{ -\frac{\zeta^\prime ( \alpha ) }{\zeta (\alpha) } s  })",
         "quadrature::levy_integral_detailed",
         "LevyIntegral.ReproducesXiRatioExponent",
         "verified",
         "drift-compensated zeta factor enters the assembled exponent"},
        {"display-24", "137",
         R"(\sum_{n \geq 2} \frac{ \Lambda (n )}{ \log n} \delta_{ \log n } ( dx ))",
         "numtheory::mu_zeta_atoms",
         "MuZetaAtoms.EnumeratesPrimePowersWithLogWeights",
         "verified", ""},
        {"display-25", "141-142",
         R"(\exp \left ( \int_0^\infty ( e ^{-sx} +  s x  - 1  ) e^{-\alpha x}  \frac{ \mu^\zeta (dx)}{ x }  \right ))",
         "harness::verify_gamma_ratio",
         "VerifyGammaRatio.MatchesClosedFormAssembly",
         "flagged-typo",
         "as printed the integrand repeats the measure label of display-23;"
         " the identity holds with the Gamma measure of display-26 and is"
         " verified in that corrected form to 1e-8"},
        {"display-26", "143",
         R"(\mu^\Gamma ( d x) & = \frac{dx}{ e^{2x} -1 })",
         "harness::verify_gamma_ratio",
         "VerifyGammaRatio.MatchesClosedFormAssembly",
         "verified", ""},
        {"display-27", "147-148",
         R"(\frac{ 1 }{ \alpha -1 + s  } & = \int_0^\infty e^{-sx } e^{- (\alpha-1) x } d x)",
         "harness::verify_bridge + harness::verify_nu0_rep",
         "VerifyBridge.ClosedFormPoints",
         "verified",
         "subordination kernel checked at generic (s,x); resulting pole factor"
         " checked in exponentiated form"},
        {"display-28", "149",
         R"(( e^{-  {\scriptstyle \frac{1}{2} }   s^2 t } -1 ) \frac{\nu^0_\alpha (t)}{t})",
         "harness::verify_nu0_rep",
         "VerifyNu0Rep.ClosedFormPoints",
         "verified", ""},
        {"display-29", "152-154",
         R"(\erfc ( (\alpha-1) \sqrt{ {\scriptstyle \frac{1}{2} }   t}) = E( e^{-t Z^0_\alpha} ))",
         "nucore::nu_zero",
         "Z0Density.LaplaceTransformIsTwiceNuZero",
         "verified",
         "erfc closed form verified; the expectation form holds up to the"
         " normalization flagged at inline-z0-density"},
        {"display-30", "159-162",
         R"(\frac{e ^{- s x} + s x -1}{x} =)",
         "quadrature::bridge_kernel_values",
         "VerifyBridge.ClosedFormPoints",
         "verified",
         "residual at or below 1e-8 on the 5x5 grid in [0.25,4]^2"},
        {"display-31", "164-166",
         R"(\int_0^\infty ( e^{-sx} + s x -1 ) e^{-\alpha x}  \frac{\mu ( dx )  }{x })",
         "quadrature::levy_integral_detailed",
         "VerifyTheorem1.PassesOnReferencePoints",
         "verified",
         "checked per measure: Gamma factor via VerifyGammaRatio, zeta factor"
         " inside the assembled exponent"},
        {"display-32", "168-170",
         R"(\nu_\alpha( t ) = \frac{1}{\sqrt{2 \pi}} \int _0^\infty e^{-tz})",
         "nucore::thorin_kernel",
         "ThorinKernelAtomic.PerAtomLaplaceTransformClosesExactly",
         "verified", ""},
        {"display-33", "172-174",
         R"(\frac{\xi(\alpha)}{\xi( \alpha + s )}    = \exp)",
         "harness::verify_theorem1",
         "VerifyTheorem1.PassesOnReferencePoints",
         "verified", "restatement of display-13 after the derivation"},
        {"display-34", "178",
         R"(\nu_\alpha^\Gamma  ( t) &= \frac{1}{\sqrt{2 \pi t}})",
         "nucore::nu_gamma",
         "NuGamma.MatchesIndependentOracles",
         "verified", "repeat of display-14"},
        {"display-35", "179",
         R"(\nu^\zeta_\alpha ( t) & =  \frac{1}{\sqrt{2\pi t}} \sum_{n \geq 2})",
         "nucore::nu_zeta",
         "NuZeta.MatchesHighPrecisionTruncatedReference",
         "verified", "repeat of display-15"},
        {"display-36", "180",
         R"(\sum_{r\geq 1} \frac{1}{p^{\alpha r}} \left( 1 - e^{-(r^2\log^2 p)/2t} \right))",
         "numtheory::mu_zeta_atoms",
         "MuZetaAtoms.EnumeratesPrimePowersWithLogWeights",
         "verified",
         "prime-power expansion equals the von Mangoldt sum by construction of"
         " the atom table"},
        {"display-37", "181",
         R"(\nu^0_\alpha (t) &=  {\scriptstyle \frac{1}{2} }   e^{  {\scriptstyle \frac{1}{2} }   (\alpha-1)^2 t})",
         "nucore::nu_zero",
         "NuZero.ClosedFormAgainstErfcxOracles",
         "verified", "repeat of display-16"},
        {"display-38", "188",
         R"(\frac{\xi(\alpha)}{\xi( {\scriptstyle \frac{1}{2} }   + is)} &=  \exp\left( -b_\alpha is)",
         "quadrature::continuation_exponent_detailed",
         "VerifyContinuation.ReportsTheFormulasActualMismatch",
         "flagged-typo",
         "the displayed exponent depends on the shift only through its square,"
         " so the formula reproduces the ratio at the point reflected about"
         " alpha instead of the critical-line target; implemented verbatim,"
         " and the mismatch is exact: the right side equals"
         " xi(1/2) exp(2 b_alpha (alpha-1/2)) / |xi(2 alpha - 1/2 - is)|,"
         " pinned to quadrature accuracy by"
         " VerifyContinuation.MismatchEqualsReflectedPointRatio (relative"
         " residual 0.92-0.95 at the reference points)"},
        {"display-39", "189",
         R"(\frac{\xi(\alpha)}{\xi( {\scriptstyle \frac{1}{2} }   - is)} &=  \exp\left( b_\alpha is)",
         "quadrature::continuation_exponent_detailed",
         "VerifyContinuation.ReportsTheFormulasActualMismatch",
         "flagged-typo",
         "same square-dependence as display-38; the two branches are"
         " numerically identical"},
        {"display-40", "192-194",
         R"(\frac{\xi( {\scriptstyle \frac{1}{2} }  )}{\xi( {\scriptstyle \frac{1}{2} }   + is)} = c_\alpha \exp)",
         "harness::verify_continuation",
         "VerifyContinuation.ReportsTheFormulasActualMismatch",
         "flagged-typo",
         "averaged form implemented verbatim; fails for the same reason as"
         " display-38, see the README limitations section"},
        {"display-41", "200-202",
         R"(\frac{\xi( {\scriptstyle \frac{1}{2} }  )}{\xi( {\scriptstyle \frac{1}{2} }   - s)} = E[\exp)",
         "(none)", "(none)", "out-of-scope",
         "existence statement; no constructive enumeration of the mixing"
         " distribution is given, so nothing is computable beyond the product"
         " form already covered by display-06/display-09; see the README"
         " limitations section"},
        {"display-42", "207-213",
         R"(:= E\left[\exp( {\scriptstyle \frac{1}{2} }   s^2 H_ {\scriptstyle \frac{1}{2} }  ^\xi)\right])",
         "(none)", "(none)", "out-of-scope",
         "derivation assumes a discrete spectrum for nu that is not exhibited;"
         " the Frullani ingredient is covered by inline-frullani"},
        {"inline-frullani", "50",
         R"(\log ( z / z+s^2 ) = \int_0^\infty ( 1 - e^{-s^2 t} ) e^{-tz} dt /t)",
         "harness::verify_frullani",
         "VerifyFrullani.ClosedFormPoints",
         "verified", ""},
        {"inline-thorin-atoms", "56",
         R"(U_ {\scriptstyle \frac{1}{2} }   (dz) = \sum_{\tau > 0} \delta_{ \tau^2 } ( dz))",
         "zeros::measure_from_zeros",
         "MeasureFromZeros.UnitMassAtSquaredOrdinates",
         "verified", ""},
        {"inline-b-alpha", "99",
         R"(b_\alpha = \xi^\prime ( \alpha) / \xi ( \alpha  ) - 1 / (\alpha-1))",
         "specfun::b_alpha",
         "BAlpha.MatchesHighPrecisionReferences",
         "verified", ""},
        {"inline-z0-density", "155",
         R"(2(\alpha-1)/ \pi \sqrt{2x}((\alpha-1)^2+2x))",
         "nucore::z0_density",
         "Z0Density.LaplaceTransformIsTwiceNuZero",
         "flagged-typo",
         "with the printed constant the density integrates to 1 but its"
         " Laplace transform is twice nu^0 (nu^0(0+) = 1/2); the claimed"
         " transform identity needs either half the constant or a factor 1/2"
         " in front of the expectation"},
    }};

inline bool is_display(const CoverageEntry& entry) {
  return entry.id.starts_with("display-");
}

// Rows belonging to the main representation theorem: statement displays 13-17
// plus the derivation displays 18-37.
inline bool in_theorem_block(const CoverageEntry& entry) {
  if (!is_display(entry)) return false;
  int n = (entry.id[8] - '0') * 10 + (entry.id[9] - '0');
  return n >= 13 && n <= 37;
}

inline bool is_theorem_statement(const CoverageEntry& entry) {
  if (!is_display(entry)) return false;
  int n = (entry.id[8] - '0') * 10 + (entry.id[9] - '0');
  return n >= 13 && n <= 17;
}

struct LedgerCheck {
  bool ok = true;
  std::string problem;
};

// Structural invariants: status vocabulary, ordered unique display ids, the
// theorem block free of out-of-scope rows, its statement fully verified, and
// operation/test named on every row that claims coverage.
inline LedgerCheck check_ledger() {
  auto fail = [](std::string msg) { return LedgerCheck{false, std::move(msg)}; };
  std::size_t displays = 0;
  int last_display = 0;
  for (const CoverageEntry& e : coverage_table) {
    if (e.status != "verified" && e.status != "out-of-scope" &&
        e.status != "flagged-typo")
      return fail(std::string(e.id) + ": unknown status");
    if (e.anchor.empty() || e.lines.empty())
      return fail(std::string(e.id) + ": missing location or anchor");
    if (is_display(e)) {
      ++displays;
      int n = (e.id[8] - '0') * 10 + (e.id[9] - '0');
      if (n != last_display + 1)
        return fail(std::string(e.id) + ": display ids must be consecutive");
      last_display = n;
    }
    if (e.status == "out-of-scope") {
      if (e.note.empty())
        return fail(std::string(e.id) + ": out-of-scope rows need a note");
    } else if (e.operation == "(none)" || e.test == "(none)") {
      return fail(std::string(e.id) + ": covered rows must name operation and test");
    }
    if (e.status == "flagged-typo" && e.note.empty())
      return fail(std::string(e.id) + ": flagged rows need a note");
    if (in_theorem_block(e) && e.status == "out-of-scope")
      return fail(std::string(e.id) + ": theorem block must be covered");
    if (is_theorem_statement(e) && e.status != "verified")
      return fail(std::string(e.id) + ": theorem statement must be verified");
  }
  if (displays != display_count)
    return fail("display row count drifted from the declared total");
  return {};
}

inline std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\n") == std::string_view::npos)
    return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

inline std::string coverage_csv() {
  std::string out = "id,lines,anchor,operation,test,status,note\n";
  for (const CoverageEntry& e : coverage_table) {
    out += csv_escape(e.id);
    out += ',';
    out += csv_escape(e.lines);
    out += ',';
    out += csv_escape(e.anchor);
    out += ',';
    out += csv_escape(e.operation);
    out += ',';
    out += csv_escape(e.test);
    out += ',';
    out += csv_escape(e.status);
    out += ',';
    out += csv_escape(e.note);
    out += '\n';
  }
  return out;
}

}  // namespace xiggc::docsmap
