from flask import Blueprint, current_app as app

from apps.common import (
    agents,
    automata_list,
    body,
    composed,
    coordinators,
    groups,
    high_level,
    optional_groups,
    outcome_json,
    require,
    uncontrollable,
)
from decentralized import DecentralizedProblem
from utils.errors import InvalidRequestError

synthesis = Blueprint("synthesis", __name__)


@synthesis.route("/synth/two-level", methods=["POST"])
def synth_two_level():
    f = body()
    require(f, "plants", "spec")
    plants = automata_list(f, "plants")
    return outcome_json(
        app.toolkit.synth_two_level(
            composed(f, "spec"),
            plants,
            groups(f, len(plants)),
            uncontrollable(f, composed(f, "plants")),
            coordinators(f),
            high_level(f),
            extend=bool(f.get("extend", True)),
            ensure_observer=f.get("ensure_observer"),
        )
    )


@synthesis.route("/solve/decentralized", methods=["POST"])
def solve_decentralized():
    """
    Body: plant and spec automaton texts, agents as [{"obs": ..., "ctrl": ...}],
    optional groups, coord and highcoord.
    """
    f = body()
    require(f, "plant", "spec", "agents")
    enriched = f.get("enriched_control")
    if enriched is not None and enriched not in ("coordinator", "observation-only"):
        raise InvalidRequestError("Field 'enriched_control' must be 'coordinator' or 'observation-only'")
    problem = DecentralizedProblem(
        composed(f, "plant"),
        composed(f, "spec"),
        tuple(agents(f)),
        optional_groups(f),
        coordinators(f),
        high_level(f),
    )
    return outcome_json(
        app.toolkit.solve_decentralized(
            problem,
            extend=bool(f.get("extend", True)),
            ensure_observer=f.get("ensure_observer"),
            enriched_control=enriched,
        )
    )
