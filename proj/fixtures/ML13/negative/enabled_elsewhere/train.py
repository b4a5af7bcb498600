import torch

weights = torch.ones(3)
