"""Exact electromagnetic modes of the expanding de Sitter universe.

Library + CLI constructing the closed-form mode solutions of the matrix
(Riemann-Silberstein) form of Maxwell's equations on the non-static
spherical de Sitter patch, together with their 10-component
potential/field-strength form, and certifying them numerically by
residual evaluation of every reduced equation system.
"""

from .algebra import (Basis, ExactC, ExactMatrix, Matrix4C, cyclic_transform,
                      dkp_substitution, dkp_substitution_table,
                      lorentz_generator, mo_alphas, so3c_generators)
from .errors import (AngleDomainError, DivergentSeriesError, DsemError,
                     GammaPoleError, InvalidQuantumNumbersError,
                     OutOfRangeError, SingularPointError,
                     StepExitsDomainError, WrongParityError)
from .geometry import (FrameData, SpacetimePoint, conformal_time, frame_at,
                       inverse_conformal_time, metric_diagonal,
                       tetrad_divergences, volume_factor)
from .modes import (DKPField, GaugePotentials, MOField, ModeIndex, Parity,
                    RadialSolution, ScalarTriple, dkp_field, dkp_profiles,
                    dkp_strengths_from_phi, electric_potentials_landau,
                    electric_potentials_lorentz, gradient_solution, mo_field,
                    mo_profiles, phi_from_dkp_strengths, radial_profile,
                    scalar_triple, spectrum)
from .special import (hyp2f1, hyp2f1_dz, wigner_D, wigner_recurrence_residuals,
                      wigner_small_d, wigner_small_d_dtheta)
from .verify import (DEFAULT_TOLERANCES, GridSpec, ResidualReport, fd_partial,
                     residual_conformal_kfg, residual_dkp, residual_ffg,
                     residual_full_maxwell, residual_lorentz,
                     residual_mo_reduced, residual_mo_unscaled,
                     residual_potential_system, residual_radial_ode,
                     residual_wave_G, ring_derivatives)

__version__ = "0.1.0"
