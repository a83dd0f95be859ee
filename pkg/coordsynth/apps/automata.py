from flask import Blueprint, current_app as app

from apps.common import body, composed, automata_list, events, outcome_json, require, uncontrollable
from utils.errors import InvalidRequestError

automata = Blueprint("automata", __name__)


@automata.route("/product", methods=["POST"])
def automata_product():
    f = body()
    return outcome_json(app.toolkit.product(automata_list(f, "plants")))


@automata.route("/project", methods=["POST"])
def automata_project():
    f = body()
    require(f, "plant", "onto")
    return outcome_json(app.toolkit.project(composed(f, "plant"), events(f, "onto"), f.get("minimize")))


@automata.route("/supc", methods=["POST"])
def automata_supc():
    f = body()
    require(f, "plant", "spec")
    plant = composed(f, "plant")
    return outcome_json(app.toolkit.supc(composed(f, "spec"), plant, uncontrollable(f, plant)))


@automata.route("/enumerate", methods=["POST"])
def automata_enumerate():
    f = body()
    require(f, "plant", "maxlen")
    if not isinstance(f["maxlen"], int):
        raise InvalidRequestError("Field 'maxlen' must be an integer")
    return outcome_json(app.toolkit.enumerate_words(composed(f, "plant"), f["maxlen"]))
