"""Gauss diagrams of virtual links and their classification up to Xi-moves."""

from .diagram import (SOURCE, TARGET, Chord, EndpointRef, GaussCodeError, GaussDiagram,
                      canonical_diagram, canonical_key, isomorphic, parse_gauss_code, serialize)
from .invariants import (EVEN, ODD, InvariantError, InvariantProfile, ReducedLinkingClass,
                         canonical_fbar, chords_equivalent, invariant_profile, is_odd_self_chord,
                         knot_odd_writhe, linking_numbers, odd_writhe, parity,
                         reduced_linking_class, sigma_tau)
from .macros import (MacroKind, MacroWindow, PatternError, apply_macro, check_macro,
                     expand_macro, expected_result, parse_macro)
from .moves import (Move, MoveError, MoveKind, apply_move, apply_moves, enumerate_moves,
                    format_move, invert, parse_move)
from .normal_forms import (Letter, NormalFormError, WordNormal, build_even_normal,
                           build_knot_normal, build_odd_normal, forbidden_equivalent,
                           predicted_profile, normalize, parse_word, profile_to_normal,
                           realize_word, word_normalize, xi_equivalent)
from .oracle import SearchResult, bfs_connect, census, random_scramble

__version__ = "0.1.0"
