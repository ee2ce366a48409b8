"""Exact momentum map images for quiver representations."""

from .quiver import (
    DomainError,
    LegExtendedQuiver,
    Quiver,
    euler_form,
    is_single_oriented_cycle,
    is_strongly_connected,
    leg_extend,
    loop_quiver,
    subspace_quiver,
    support,
)
from .settuples import (
    SetTuple,
    enumerate_settuples,
    expand,
    from_flag,
    height,
    subselect,
    to_flag,
    weight,
)
from .schofield import ext_generic, flag_general_subrep_set, general_subrep_set, is_general_subrep
from .cone import (
    ConeDescription,
    MembershipResult,
    Spectrum,
    ThetaVector,
    emit_inequalities,
    has_positive_volume,
    hat_s_direct,
    hat_s_via_expansion,
    hat_s_via_leg,
    is_maximal_image,
    maximal_image_criterion,
    membership,
    scalar_membership,
    spectrum_of_theta,
    sufficient_volume_criterion,
    theta_of_spectrum,
)
