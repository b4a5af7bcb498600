import torch
import torch.nn as nn

torch.manual_seed(0)
torch.use_deterministic_algorithms(True)

model = nn.Linear(4, 1)
optimizer = torch.optim.SGD(model.parameters(), lr=0.01)
criterion = nn.MSELoss()
inputs = torch.ones(8, 4)
targets = torch.zeros(8, 1)

model.train()
for epoch in range(3):
    optimizer.zero_grad()
    loss = criterion(model(inputs), targets)
    loss.backward()
    optimizer.step()
    model.eval()  # expect: ML18
    with torch.no_grad():
        print(criterion(model(inputs), targets).item())
