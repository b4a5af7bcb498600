import torch
import torch.nn as nn

torch.manual_seed(0)
torch.use_deterministic_algorithms(True)

net = nn.Linear(4, 1)
criterion = nn.MSELoss()
batches = [torch.ones(2, 4), torch.zeros(2, 4)]
losses = []
for batch in batches:
    loss = criterion(net(batch), torch.zeros(2, 1))
    losses.append(loss.item())
