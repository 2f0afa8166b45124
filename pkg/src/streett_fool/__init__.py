"""Full Streett automata, Q-rankings and Q-words, with machine checks of
the fooling-set conditions behind the Streett complementation lower bound."""

__version__ = "0.1.0"

from .builder import build_h_word, build_q_word, build_r_word
from .core import (
    FiniteWord,
    FullStreettAutomaton,
    LassoWord,
    Letter,
    RunPath,
    StateId,
    build_full_streett,
    concat,
    delta_graph_edges,
    pad_index,
)
from .lasso import rabin_accepts, streett_accepts
from .rankings import (
    QRanking,
    count_q_rankings,
    enumerate_q_rankings,
    lower_bound_report,
)
from .suite import CampaignConfig, run_campaign
from .verifier import (
    check_property_1,
    check_property_2,
    check_property_3,
    check_property_4,
    enumerate_full_paths,
    verify_q_word,
)
