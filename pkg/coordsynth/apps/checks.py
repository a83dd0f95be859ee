from flask import Blueprint, current_app as app

from apps.common import (
    agents,
    automata_list,
    body,
    composed,
    coordinators,
    events,
    groups,
    high_level,
    outcome_json,
    require,
    uncontrollable,
)
from utils.errors import InvalidRequestError

checks = Blueprint("checks", __name__)


@checks.route("/<string:property_>", methods=["POST"])
def check_property(property_: str):
    f = body()
    toolkit = app.toolkit
    if property_ == "shared":
        return outcome_json(toolkit.check_shared(agents(f)))
    if property_ in ("observer", "lcc"):
        require(f, "plant", "onto")
        plant = composed(f, "plant")
        if property_ == "observer":
            return outcome_json(toolkit.check_observer(plant, events(f, "onto")))
        return outcome_json(
            toolkit.check_lcc(plant, events(f, "onto"), uncontrollable(f, plant), bool(f.get("strict_occ", False)))
        )
    if property_ == "controllable":
        require(f, "plant", "spec")
        plant = composed(f, "plant")
        return outcome_json(toolkit.check_controllable(composed(f, "spec"), plant, uncontrollable(f, plant)))
    if property_ == "coobservable":
        require(f, "plant", "spec")
        return outcome_json(
            toolkit.check_coobservable(composed(f, "spec"), composed(f, "plant"), agents(f), f.get("max_agents"))
        )
    if property_ == "cd":
        require(f, "spec")
        if "pieces" in f:
            pieces = [events({"p": p}, "p") for p in str(f["pieces"]).split(";")]
            return outcome_json(toolkit.check_cd(composed(f, "spec"), pieces=pieces))
        require(f, "plants", "coord")
        coords = coordinators(f)
        assert coords is not None
        return outcome_json(
            toolkit.check_cd(composed(f, "spec"), plants=automata_list(f, "plants"), coordinator=coords[0])
        )
    if property_ == "cc2":
        require(f, "plants", "spec")
        plants = automata_list(f, "plants")
        return outcome_json(
            toolkit.check_cc2(
                composed(f, "spec"),
                plants,
                groups(f, len(plants)),
                coordinators(f),
                high_level(f),
                uncontrollable(f, composed(f, "plants")),
            )
        )
    raise InvalidRequestError(f"Unknown property {property_!r}")
