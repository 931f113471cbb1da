"""
Configuration module for link invariant computations.

This module defines the Config class, which contains parameters
for the Milnor invariant engine, the fixed-point oracle, the random
move driver and output formatting.
"""

import json
import logging
import os

logger = logging.getLogger(__name__)


class Config:
    """
    Configuration parameters for invariant computations.

    Parameters can be loaded from and saved to JSON files for easy reuse.
    Unknown keys in a file are kept, so newer files load in older code.

    Attributes:
        milnor (dict): Milnor table parameters (resource guard, workers, depth)
        oracle (dict): Fixed-point oracle parameters
        moves (dict): Random move driver parameters
        output (dict): Output formatting parameters
    """

    def __init__(self):
        """
        Initialize with default configuration values.
        """
        self.milnor = {
            'max_sequences': 1000000,         # Resource guard on sum of n**length
            'workers': 1,                     # Threads used to expand longitudes
            'depth_offset': 0                 # Extra rewriting depth beyond |I|
        }

        self.oracle = {
            'max_sweeps': 500                 # Relation sweeps before giving up
        }

        self.moves = {
            'random_length': 10,              # Moves per random isotopy
            'kinds': ['R1', 'R2', 'R3']       # Move kinds the random driver may pick
        }

        self.output = {
            'json_indent': 2
        }

    def sections(self):
        """
        Return the configuration as a dict of sections.

        Returns:
            dict: Section name to parameter dict
        """
        return {
            'milnor': self.milnor,
            'oracle': self.oracle,
            'moves': self.moves,
            'output': self.output
        }

    def load_from_file(self, file_path):
        """
        Load configuration from a JSON file.

        Args:
            file_path (str): Path to the config file

        Returns:
            bool: True if successful, False otherwise
        """
        try:
            with open(file_path, 'r') as f:
                config = json.load(f)
        except FileNotFoundError:
            logger.warning("Config file %s not found, using defaults", file_path)
            return False
        except json.JSONDecodeError as e:
            logger.warning("Invalid config file %s (%s), using defaults", file_path, e)
            return False

        if not isinstance(config, dict):
            logger.warning("Config file %s does not hold an object, using defaults", file_path)
            return False

        for name, section in self.sections().items():
            if isinstance(config.get(name), dict):
                section.update(config[name])
        return True

    def save_to_file(self, file_path):
        """
        Save configuration to a JSON file.

        Args:
            file_path (str): Path to save the config file

        Returns:
            bool: True if successful, False otherwise
        """
        try:
            os.makedirs(os.path.dirname(os.path.abspath(file_path)), exist_ok=True)
            with open(file_path, 'w') as f:
                json.dump(self.sections(), f, indent=self.output.get('json_indent', 2))
            return True
        except OSError as e:
            logger.warning("Error saving config to %s: %s", file_path, e)
            return False

    def __repr__(self):
        return f"Config({self.sections()!r})"
