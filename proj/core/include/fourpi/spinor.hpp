#pragma once

#include <complex>

namespace fourpi {

using Complex = std::complex<double>;

// Two-component spin state (xi_plus, xi_minus) along the field axis.
// Always normalized to |xi_plus|^2 + |xi_minus|^2 = 1 within 1e-12.
class Spinor {
 public:
  static constexpr double kNormTolerance = 1e-12;

  // Spin up along the field axis.
  Spinor() = default;

  // Throws DomainError if the components are not normalized.
  Spinor(Complex xi_plus, Complex xi_minus);

  // Rescales an arbitrary non-zero pair onto the unit sphere.
  static Spinor normalized(Complex xi_plus, Complex xi_minus);

  // Real spinor (sqrt(p), sqrt(1 - p)); p must lie in [0, 1].
  static Spinor from_spin_up_probability(double p);

  static Spinor up() { return {}; }
  static Spinor down() { return Spinor(Complex{0.0}, Complex{1.0}); }

  Complex xi_plus() const { return xi_plus_; }
  Complex xi_minus() const { return xi_minus_; }

  double prob_up() const { return std::norm(xi_plus_); }
  double prob_down() const { return std::norm(xi_minus_); }

  // <S_+> / (hbar) in units where S_+ = S_x + i S_y, i.e. conj(xi_+) xi_-.
  Complex transverse_spin() const { return std::conj(xi_plus_) * xi_minus_; }

  // Multiplies both components by the unit-modulus factor e^{i theta}.
  Spinor with_global_phase(double theta) const;

  friend bool operator==(const Spinor&, const Spinor&) = default;

 private:
  struct Unchecked {};
  Spinor(Complex xi_plus, Complex xi_minus, Unchecked)
      : xi_plus_(xi_plus), xi_minus_(xi_minus) {}

  friend Spinor apply_spin_phase(const Spinor& spinor, double alpha);

  Complex xi_plus_{1.0, 0.0};
  Complex xi_minus_{0.0, 0.0};
};

// Rotates the spinor about the field axis: (xi+, xi-) ->
// (e^{-i alpha/2} xi+, e^{+i alpha/2} xi-). alpha = 4 pi n is the exact
// identity and alpha = 2 pi (2n+1) the exact sign flip.
Spinor apply_spin_phase(const Spinor& spinor, double alpha);

}  // namespace fourpi
