import os

# Don't change this, this saves you from relative path issues :)
BASE_DIR = os.path.dirname(os.path.abspath(__file__))  # The directory where this script is located
DATA_DIR = os.path.join(BASE_DIR, 'data')  # Sample quivers, partitions and configurations
GRASSCLUSTER_DIR = os.path.join(BASE_DIR, 'grasscluster')  # Directory for grasscluster package
TEST_DIR = os.path.join(BASE_DIR, 'tests')  # Directory for tests
