"""
Contains all the functionality to interact with the main config singleton as well as the config file.

**CHOICE - THIS MODULE IS THE BASE DEPENDENCY FOR EVERYTHING ELSE**
Most other modules need access to the config singleton, including the utils module. This means that this
module here cannot have any other project internal dependencies as that would lead to circular imports.
"""
import os
import yaml
import pathlib
import typing as t

HOME_PATH = pathlib.Path.home()
FOLDER_PATH = os.path.join(HOME_PATH, '.qcalc')
CONFIG_PATH = os.path.join(FOLDER_PATH, 'config.yaml')

# The environment variable which caps the number of worker threads. It takes precedence over the
# config file.
THREADS_ENV_VAR = 'QCALC_THREADS'

DEFAULT_Q_VALUE = '1/2'
DEFAULT_N_MAX = 12
DEFAULT_K_MIN = -14
DEFAULT_K_MAX = 14
DEFAULT_TOLERANCE = 1e-10
DEFAULT_DEGREE_BOUND = 4


def load_config(path: str = CONFIG_PATH) -> dict:
    if os.path.exists(path):
        # If the config file indeed exists, we will load the yml file as a dictionary and return that
        with open(path, mode='r') as file:
            data: dict = yaml.load(file, yaml.FullLoader)

        # An empty yaml file is loaded as None
        return data or {}
    else:
        return {}


class Singleton(type):
    """
    This is metaclass definition, which implements the singleton pattern. Whatever class uses this as a
    metaclass does not work like a traditional class anymore: upon calling the constructor, the same
    instance is returned every time. This makes sure that always just a single instance exists in the
    runtime!

    .. code-block:: python

        class MySingleton(metaclass=Singleton):
            pass

        a = MySingleton()
        b = MySingleton()
        print(a is b) # true
    """
    _instances = {}

    def __call__(cls, *args, **kwargs):
        if cls not in cls._instances:
            cls._instances[cls] = super(Singleton, cls).__call__(*args, **kwargs)
        return cls._instances[cls]


class Config(metaclass=Singleton):
    """
    This is the main config singleton for the program. It can be used to load the ``config.yaml`` file and
    provides methods that act as a facade to retrieve the config values. Every getter has a default, so the
    whole package also works without any config file at all.

    .. code-block:: python

        from qcalc.config import Config

        config = Config()
        config.load()
        print(config.get_q_value())  # "1/2" unless configured otherwise

    The data from the config file is not loaded by default, only after invoking ``load`` method. Each
    call to that method will freshly load the data from the file.
    """
    def __init__(self):
        self.data = {}
        self.path: t.Optional[str] = None

    def load(self, path: str = CONFIG_PATH):
        self.path = path
        self.data = load_config(path=path)

    def reset(self):
        self.path = None
        self.data = {}

    def get_folder_path(self) -> t.Optional[str]:
        return os.path.dirname(self.path) if self.path else None

    # -- verification parameters --

    def get_q_value(self, default=DEFAULT_Q_VALUE) -> str:
        # The q value is kept as a string to be parsed as an exact rational, a yaml float such as 0.5
        # would already have lost that information for values like 1/3
        return str(self.retrieve_nested_with_default('verify/q', default))

    def get_window(self,
                   default: t.Tuple[int, int, int] = (DEFAULT_N_MAX, DEFAULT_K_MIN, DEFAULT_K_MAX),
                   ) -> t.Tuple[int, int, int]:
        return (
            int(self.retrieve_nested_with_default('window/n_max', default[0])),
            int(self.retrieve_nested_with_default('window/k_min', default[1])),
            int(self.retrieve_nested_with_default('window/k_max', default[2])),
        )

    def get_tolerance(self, default=DEFAULT_TOLERANCE) -> float:
        return float(self.retrieve_nested_with_default('verify/tolerance', default))

    def get_degree_bound(self, default=DEFAULT_DEGREE_BOUND) -> int:
        return int(self.retrieve_nested_with_default('sphere/degree_bound', default))

    def get_alpha(self, default=1.0) -> float:
        return float(self.retrieve_nested_with_default('operator/alpha', default))

    def get_beta(self, default=1.0) -> float:
        return float(self.retrieve_nested_with_default('operator/beta', default))

    def get_alpha_r(self, default: t.Optional[t.List[float]] = None) -> t.List[float]:
        value = self.retrieve_nested_with_default('operator/alpha_r', default)
        return [float(v) for v in (value or [])]

    def get_epsilon(self, default=1) -> int:
        return int(self.retrieve_nested_with_default('operator/epsilon', default))

    def get_seed(self, default=0) -> int:
        return int(self.retrieve_nested_with_default('verify/seed', default))

    def get_num_threads(self, default: t.Optional[int] = None) -> t.Optional[int]:
        if THREADS_ENV_VAR in os.environ:
            return int(os.environ[THREADS_ENV_VAR])

        value = self.retrieve_nested_with_default('run/threads', default)
        return None if value is None else int(value)

    # -- utility methods --

    def retrieve_nested_with_default(self, query: str, default: t.Any):
        try:
            keys = query.split('/')
            current_value = self.data
            for key in keys:
                current_value = current_value[key]

            return current_value
        except (KeyError, TypeError):
            return default

    def __str__(self):
        return (f'Config(path="{self.path}")')
