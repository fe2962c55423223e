#pragma once

#include <stdexcept>
#include <string>

namespace qbohr {

/// Base class for all domain errors thrown by the engine.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Two elements/maps with different parent algebras were combined.
struct ParentMismatch : Error { using Error::Error; };

/// Blockwise inversion hit a condition number above the cutoff.
struct SingularElement : Error { using Error::Error; };

/// A subspace handed to wedderburn_decompose is not closed under
/// multiplication, star, or does not contain the unit.
struct NotASubalgebra : Error { using Error::Error; };

/// conjugate() was called on a representation that is not unitary.
struct RequiresUnitary : Error { using Error::Error; };

/// An operation requiring admissibility received a non-admissible input.
struct NotAdmissible : Error { using Error::Error; };

/// The generated subalgebra of a representation is not mapped into its own
/// tensor square by the comultiplication (numerical inconsistency).
struct ClosureEscapesDelta : Error { using Error::Error; };

/// The bi-invariance system for the Haar state has no solution.
struct NoSolution : Error { using Error::Error; };

/// The bi-invariance system for the Haar state has a solution space of
/// dimension greater than one.
struct NonUnique : Error { using Error::Error; };

/// A functional or matrix expected to be positive (semi)definite is not.
struct NotPositive : Error { using Error::Error; };

/// Extending counit/antipode from generators failed a consistency or axiom
/// check beyond tolerance.
struct ExtensionInconsistent : Error { using Error::Error; };

/// A morphism's image is not contained in the carrier subspace it must
/// factor through.
struct RangeEscapesCarrier : Error { using Error::Error; };

/// A seed representation handed to bohr_from_reps is not admissible.
struct NonAdmissibleSeed : Error { using Error::Error; };

/// A multiplication table is not a group (associativity/identity/inverses).
struct NotAGroup : Error { using Error::Error; };

/// A functional supplied to a tracial state family is not a tracial state.
struct NotTracial : Error { using Error::Error; };

/// A proposed comultiplication failed validation (unital *-homomorphism or
/// coassociativity).
struct InvalidComultiplication : Error { using Error::Error; };

/// Malformed user-facing input (JSON files, CLI arguments). Maps to CLI
/// exit code 2, as opposed to mathematical failures which map to 1.
struct InputError : Error { using Error::Error; };

}  // namespace qbohr
