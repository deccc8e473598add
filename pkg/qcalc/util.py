import os
import pathlib
import logging
import difflib
import typing as t

import click
import psutil
import jinja2 as j2

from qcalc.config import Config

PATH = pathlib.Path(__file__).parent.absolute()
TEMPLATES_PATH = os.path.join(PATH, 'templates')
TEMPLATE_ENV = j2.Environment(
    loader=j2.FileSystemLoader(TEMPLATES_PATH),
    autoescape=False,
    keep_trailing_newline=True,
)
TEMPLATE_ENV.globals.update({
    'os': os
})

VERSION_PATH = os.path.join(PATH, 'VERSION')

NULL_LOGGER = logging.Logger('null')
NULL_LOGGER.addHandler(logging.NullHandler())


def get_version() -> str:
    """
    Reads the version file and returns the version string in the format "MAJOR.MINOR.PATCH"

    :return: the version string
    """
    with open(VERSION_PATH, mode='r') as file:
        content = file.read()

    version_string = content.replace(' ', '').replace('\n', '')
    return version_string


def get_num_threads(config: t.Optional[Config] = None) -> int:
    """
    Returns the number of worker threads to be used for independent verification suites. The
    ``QCALC_THREADS`` environment variable and the config file take precedence, otherwise the number of
    physical cores is used.

    :param config: The config instance to query. Defaults to the singleton.
    :return: A positive integer
    """
    config = config or Config()
    num_threads = config.get_num_threads()
    if num_threads is None:
        # cpu_count may return None on some exotic platforms
        num_threads = psutil.cpu_count(logical=False) or 1

    return max(1, num_threads)


def closest_match(value: str, options: t.Iterable[str]) -> str:
    """
    Returns the element of ``options`` which is the most similar to ``value``. This is used to
    produce "did you mean" hints in error messages.
    """
    similarities = [(option, difflib.SequenceMatcher(None, value, option).ratio())
                    for option in options]
    similarities = sorted(similarities, key=lambda tupl: tupl[1], reverse=True)
    return similarities[0][0]


def ensure_folder(path: str) -> None:
    # This is probably the easiest if we do a recursive approach...

    parent_path = os.path.dirname(path)
    # If the path exists then that's nice and we don't need to do anything at all
    if os.path.exists(path):
        return
    # This is the base case of the recursion: The immediate parent folder exists but the given path does
    # not, which means to fix this we can simply create a new folder
    elif not os.path.exists(path) and os.path.exists(parent_path):
        os.mkdir(path)
    # Otherwise more of the nested structure does not exist yet and we enter the recursion
    else:
        ensure_folder(parent_path)
        os.mkdir(path)


def make_stream_logger(name: str = 'qcalc', level: int = logging.INFO) -> logging.Logger:
    """
    Creates a logger which writes to stderr. The CLI uses this when the ``--verbose`` flag is given so
    that the progress messages never mix with the report on stdout.
    """
    logger = logging.Logger(name, level=level)
    handler = logging.StreamHandler()
    handler.setFormatter(logging.Formatter('%(levelname)s %(message)s'))
    logger.addHandler(handler)
    return logger


# == CUSTOM JINJA FILTERS ==

def j2_filter_bold(value: str):
    return click.style(value, bold=True)


def j2_filter_fg(value: str, color: str):
    return click.style(value, fg=color)


def j2_filter_sci(value: t.Optional[float]):
    """
    Renders a residual in scientific notation with three significant digits. Missing values are
    rendered as a dash so that the table columns stay aligned.
    """
    if value is None:
        return '-'

    return f'{value:.2e}'


TEMPLATE_ENV.filters['bold'] = j2_filter_bold
TEMPLATE_ENV.filters['fg'] = j2_filter_fg
TEMPLATE_ENV.filters['sci'] = j2_filter_sci
