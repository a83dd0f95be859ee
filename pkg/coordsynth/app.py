import logging
import traceback

from flask import Flask, jsonify, Response
from flask_cors import CORS

from apps import automata, checks, synthesis
from toolkit import Toolkit
from utils.config import load_config
from utils.errors import (
    InvalidRequestError,
    InvalidStateError,
    DecompositionError,
    GeneralError,
)
from utils.logging_setup import LOG_STREAM, configure

log: logging.Logger = logging.getLogger("werkzeug")
log.setLevel(logging.ERROR)

config: dict = load_config()
configure(config)

app: Flask = Flask(__name__)
app.config["JSONIFY_PRETTYPRINT_REGULAR"] = True
CORS(app)

app.register_blueprint(automata, url_prefix="/automata")
app.register_blueprint(checks, url_prefix="/check")
app.register_blueprint(synthesis)

logger: logging.Logger = logging.getLogger("coordsynth")

app.toolkit = Toolkit(config)
app.toolkit_config = config


def _error(title: str, e: Exception, status: int, **extra) -> tuple[Response, int]:
    logger.error(type(e).__name__)
    logger.info("Traceback of %s : ", type(e).__name__, exc_info=e)
    return (
        jsonify(
            {
                "title": title,
                "message": str(e),
                "exception": type(e).__name__,
                "traceback": traceback.format_tb(e.__traceback__),
                **extra,
            }
        ),
        status,
    )


@app.errorhandler(Exception)
def handle_error(e: Exception) -> tuple[Response, int]:
    return _error("Unhandled Server Error", e, 500)


@app.errorhandler(InvalidRequestError)
def handle_400(e: InvalidRequestError) -> tuple[Response, int]:
    return _error("Invalid Request", e, 400, line=getattr(e, "line", None))


@app.errorhandler(InvalidStateError)
def handle_409(e: InvalidStateError) -> tuple[Response, int]:
    return _error("Invalid State Error", e, 409)


@app.errorhandler(DecompositionError)
def handle_decomposition(e: DecompositionError) -> tuple[Response, int]:
    return _error(
        "Not Conditionally Decomposable",
        e,
        409,
        witness=" ".join(e.witness),
        group=e.group,
        suggestion=e.suggestion,
        stage=e.stage,
    )


@app.errorhandler(GeneralError)
def handle_500(e: GeneralError) -> tuple[Response, int]:
    return _error("Server Error", e, 500)


@app.route("/")
def index() -> str:
    return "Coordination control synthesis service"


@app.route("/favicon.ico")
def favicon() -> str:
    return ""


@app.route("/logs")
def logs():
    return {"result": LOG_STREAM.getvalue().split("\n")[::-1]}


if __name__ == "__main__":
    app.run(host=config["server"]["host"], port=int(config["server"]["port"]))
