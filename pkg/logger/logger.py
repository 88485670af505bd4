import logging
import logging.config
from pathlib import Path

from utils import read_json

DEFAULT_CONFIG = Path(__file__).parent / 'logger_config.json'


def setup_logging(save_dir, log_config=DEFAULT_CONFIG, default_level=logging.INFO):
    """
    Setup logging configuration
    """
    log_config = Path(log_config)
    if log_config.is_file():
        config = read_json(log_config)
        # modify logging paths based on run config
        for _, handler in config['handlers'].items():
            if 'filename' in handler:
                handler['filename'] = str(Path(save_dir) / handler['filename'])

        logging.config.dictConfig(config)
    else:
        logging.basicConfig(level=default_level)
        logging.getLogger(__name__).warning('logging configuration file is not found in %s', log_config)
