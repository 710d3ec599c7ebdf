"""JSON forms of labelings, verify reports and graph + labeling bundles.

A labeling is a plain array, index = vertex id::

    [1, 2, 3]

A bundle keeps the graph and its labels together so they can be piped between commands::

    {"graph": {...}, "labels": [1, 2, 3]}
"""

import json

from ..errors import LabelingError
from ..graph.codec import graph_from_dict
from ..graph.codec import graph_to_dict
from .base import Labeling


def serialize_labeling(labeling):
    return json.dumps(list(labeling))


def labeling_from_data(data, field="labels"):
    if not isinstance(data, list):
        raise LabelingError("{}: expected an array of labels".format(field))
    for index, label in enumerate(data):
        if isinstance(label, bool) or not isinstance(label, int):
            raise LabelingError("{}.{}: expected an integer, got {!r}".format(field, index, label))
    return Labeling(data)


def parse_labeling(text):
    """JSON text to :py:class:`Labeling`.

    :raise LabelingError: Not JSON or not an array of integers
    """
    try:
        data = json.loads(text)
    except ValueError as e:
        raise LabelingError("labels: not valid JSON: {}".format(e)) from e
    return labeling_from_data(data)


def serialize_report(report):
    return json.dumps(report.to_dict())


def serialize_bundle(g, labeling):
    return json.dumps({"graph": graph_to_dict(g), "labels": list(labeling)})


def parse_bundle(text):
    """
    :return: tuple (Graph, Labeling or None). ``labels`` is optional so a bare graph document is also accepted.

    :raise DomainError: Malformed graph or labels
    """
    try:
        data = json.loads(text)
    except ValueError as e:
        raise LabelingError("bundle: not valid JSON: {}".format(e)) from e

    if isinstance(data, dict) and "graph" in data:
        g = graph_from_dict(data["graph"])
        labels = data.get("labels")
        labeling = labeling_from_data(labels) if labels is not None else None
        return g, labeling

    return graph_from_dict(data), None
