import torch  # expect: ML13

torch.manual_seed(0)
weights = torch.ones(3)
