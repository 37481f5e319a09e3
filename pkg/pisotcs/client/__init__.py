from .config import PisotcsConfig, configure, get_config, load_from_env, load_from_file
