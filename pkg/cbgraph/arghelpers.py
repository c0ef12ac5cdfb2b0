from shlex import _find_unsafe


def double_quote(s):
    """Return a shell-escaped version of the string *s*."""
    s = str(s)
    if not s:
        return '""'
    if _find_unsafe(s) is None:
        return s

    # use double quotes, and prefix double quotes with a \
    return '"' + s.replace('"', '\\\"') + '"'


def args_to_dict(args):
    args_dict = vars(args)
    result = {}
    for k in sorted(args_dict.keys()):
        # Skip _is_set keys
        if k.endswith("_is_set"):
            continue
        result[k] = args_dict[k]
    return result


def rerun_command(command, operands, options=None):
    """
    Command line reproducing a witness, e.g.
    run.sh conditions pt.el TPC0 --max-dist 2
    """
    parts = ['run.sh', command] + [double_quote(o) for o in operands]
    for key, value in sorted((options or {}).items()):
        flag = '--' + key.replace('_', '-')
        if value is True:
            parts.append(flag)
        elif value is not None and value is not False:
            if isinstance(value, (list, tuple)):
                value = ",".join(map(str, value))
            parts.extend([flag, double_quote(value)])
    return " ".join(parts)
