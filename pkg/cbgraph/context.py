import os
import multiprocessing

# Define some needed locations
current_path = os.path.abspath(os.path.dirname(__file__))
root_path, _ = os.path.split(current_path)

settings_path = os.path.join(root_path, 'settings.yaml')
version_path = os.path.join(root_path, 'VERSION')

# Edge list and sidecar extensions written by `gen` and `cover --emit`
edgelist_extension = '.el'
labels_extension = '.labels'
cover_map_extension = '.map'

# Define the number of cores
num_cores = multiprocessing.cpu_count()
