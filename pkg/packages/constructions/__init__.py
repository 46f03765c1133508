from .pairs import thm_am_pair
from .staircase import breakpoint_profile, build_sequence, f_eval, f_table

__all__ = ["thm_am_pair", "breakpoint_profile", "build_sequence", "f_eval", "f_table"]
