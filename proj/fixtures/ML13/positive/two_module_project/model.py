import torch.nn as nn  # expect: ML13

layer = nn.Linear(3, 1)
