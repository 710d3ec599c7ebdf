"""Nested dictionary helpers for configuration overrides."""


class MergeError(Exception):
    pass


def merge_dict(a, b):
    """Merge ``b`` into ``a`` in place and return the result.

    Nested dicts are merged key by key. Anything else in ``b`` replaces the value in ``a``. A ``None`` in ``b`` leaves the value in ``a`` alone, so unset command line flags can be passed straight through.

    :raise MergeError: A dict would be replaced by a non-dict or the other way round
    """
    if not isinstance(a, dict) or not isinstance(b, dict):
        raise MergeError("Cannot merge {!r} into {!r}".format(b, a))

    for key, value in b.items():
        if value is None:
            continue
        current = a.get(key)
        if isinstance(current, dict) or isinstance(value, dict):
            if current is None:
                a[key] = merge_dict({}, value)
                continue
            if not (isinstance(current, dict) and isinstance(value, dict)):
                raise MergeError("Cannot merge {!r} into {!r} at key {}".format(value, current, key))
            merge_dict(current, value)
        else:
            a[key] = value
    return a
