#pragma once

#include "dyck/dyck_core.hpp"
#include "dyck/enumeration.hpp"
#include "dyck/krieger.hpp"
#include "dyck/numeric.hpp"

#include <span>
#include <string>
#include <vector>

namespace dyck {

/// Periodic-point ensemble an empirical distribution is built from.
enum class Ensemble { Alpha, Beta, Zero, Union };

/// Exact measure an empirical distribution is compared against.
enum class Target { Alpha, Beta, Mixture };

std::string to_string(Ensemble e);
std::string to_string(Target t);
Ensemble parse_ensemble(std::string_view text);
Target parse_target(std::string_view text);
Ensemble ensemble_of(PeriodClass c);

/// The measure each ensemble converges to. Throws InvalidArgument for Zero,
/// which has no designated limit.
Target default_target(Ensemble e);

// Cylinder tables are dense vectors over all (2M)^m words of length m,
// indexed by the base-2M code of the word in canonical symbol order, first
// symbol most significant.
std::size_t cylinder_count(int M, int m);
std::size_t cylinder_code(std::span<const Symbol> v, int M);
Word cylinder_word(std::size_t code, int M, int m);

Rational target_cylinder(const Alphabet& alphabet, Target target, std::span<const Symbol> v);
Vector<Rational> target_table(const Alphabet& alphabet, int m, Target target);

struct EmpiricalDistribution {
  int M;
  int n;
  int m;
  Ensemble ensemble;
  Integer ensemble_size;
  Vector<Rational> frequency;

  Rational at(std::span<const Symbol> v) const { return frequency(static_cast<Eigen::Index>(cylinder_code(v, M))); }
};

/// Frequency of each length-m cylinder at position 0 over Per_{class,n}.
/// Computed from cyclic occurrences, which is the same thing because the
/// ensemble is closed under rotation. Throws InvalidArgument unless
/// 1 <= m <= n, EmptyEnsemble when the class is empty.
EmpiricalDistribution build_empirical(int M, int n, PeriodClass cls, int m, const EnumerationOptions& options = {});

/// Same distribution computed literally as the fraction of words starting
/// with each cylinder. Used to cross-check build_empirical.
EmpiricalDistribution build_empirical_by_prefix(int M, int n, PeriodClass cls, int m,
                                                const EnumerationOptions& options = {});

/// Empirical distribution over Per_{alpha,n} u Per_{beta,n}. Throws
/// ConstraintViolation if it differs from the average of the two class
/// distributions, which the equal class sizes force.
EmpiricalDistribution union_empirical(int M, int n, int m, const EnumerationOptions& options = {});

EmpiricalDistribution build_ensemble(int M, int n, Ensemble ensemble, int m, const EnumerationOptions& options = {});

struct CylinderResidual {
  Word cylinder;
  Rational empirical;
  Rational exact;
  Rational abs_error;
};

struct ConvergenceRow {
  int n;
  Rational sup_distance;
  std::vector<CylinderResidual> residuals;
};

struct ConvergenceReport {
  int M;
  int m;
  Ensemble ensemble;
  Target target;
  std::vector<ConvergenceRow> rows;
};

/// Sup over admissible length-m cylinders of |empirical - target|, with the
/// full residual table. Exact arithmetic throughout.
ConvergenceRow compare_to_target(const EmpiricalDistribution& e, Target target);

ConvergenceReport convergence_report(int M, std::span<const int> periods, Ensemble ensemble, int m, Target target,
                                     const EnumerationOptions& options = {});

}  // namespace dyck
