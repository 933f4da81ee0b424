'''
Writes the default configuration to a JSON file.
'''
import argparse

from quasisym.config import VerifierConfig

parser = argparse.ArgumentParser()
parser.add_argument('--outfile', '-o', default='./quasisym.json', help='file to write config')

args = parser.parse_args()

config = VerifierConfig(use_env=False)
config.save(args.outfile)
