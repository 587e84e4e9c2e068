/** DOM wiring for the scenario-planning single-page app. */

import { GatewayClient, GatewayError } from './api.js';
import { buildComparison, formatDelta, formatUsd } from './compare.js';
import {
  ScenarioFormState,
  buildRequestBody,
  canSubmit,
  defaultFormState,
  formFromRequest,
  validateForm,
} from './form.js';
import { projectOverlay, toSvg } from './mapview.js';
import type { FixtureInfo, RunRecord, TransportMode } from './types.js';
import { planOf, reportOf } from './types.js';

const client = new GatewayClient('');
const runs = new Map<string, RunRecord>();
const selected = new Set<string>();
let fixtures: FixtureInfo[] = [];
let form: ScenarioFormState = defaultFormState();

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

function fixture(): FixtureInfo | undefined {
  return fixtures.find((f) => f.name === form.fixture);
}

function renderNodeOptions(select: HTMLSelectElement, value: number | null): void {
  const current = fixture();
  select.innerHTML = '<option value="">--</option>';
  for (const node of current?.nodes ?? []) {
    const option = document.createElement('option');
    option.value = String(node.id);
    option.textContent = `${node.name} (${node.id})`;
    if (value === node.id) option.selected = true;
    select.appendChild(option);
  }
}

function renderForm(): void {
  const fixtureSelect = el<HTMLSelectElement>('fixture');
  fixtureSelect.innerHTML = '';
  for (const f of fixtures) {
    const option = document.createElement('option');
    option.value = f.name;
    option.textContent = `${f.name} (${f.node_count} nodes)`;
    if (f.name === form.fixture) option.selected = true;
    fixtureSelect.appendChild(option);
  }
  renderNodeOptions(el<HTMLSelectElement>('origin'), form.origin);
  renderNodeOptions(el<HTMLSelectElement>('destination'), form.destination);
  el<HTMLInputElement>('containers').value = String(form.containers);
  el<HTMLInputElement>('deadline').value = String(form.deadlineHours);
  el<HTMLInputElement>('carbon').value = String(form.carbonPrice);
  el<HTMLInputElement>('cv').value = String(form.travelTimeCv);
  el<HTMLInputElement>('samples').value = String(form.samples);
  el<HTMLInputElement>('seed').value = form.seed === null ? '' : String(form.seed);
  for (const mode of ['Highway', 'Rail', 'Water'] as TransportMode[]) {
    const box = el<HTMLInputElement>(`mode-${mode.toLowerCase()}`);
    box.checked = form.allowedModes.includes(mode);
    box.disabled = !(fixture()?.modes ?? []).includes(mode);
  }
  const errors = validateForm(form);
  el<HTMLButtonElement>('submit').disabled = !canSubmit(form);
  el('form-errors').textContent = Object.values(errors).join(' · ');
}

function readForm(): void {
  const num = (id: string) => Number(el<HTMLInputElement>(id).value);
  form.fixture = el<HTMLSelectElement>('fixture').value;
  const origin = el<HTMLSelectElement>('origin').value;
  const destination = el<HTMLSelectElement>('destination').value;
  form.origin = origin ? Number(origin) : null;
  form.destination = destination ? Number(destination) : null;
  form.containers = num('containers');
  form.deadlineHours = num('deadline');
  form.carbonPrice = num('carbon');
  form.travelTimeCv = num('cv');
  form.samples = num('samples');
  const seed = el<HTMLInputElement>('seed').value;
  form.seed = seed === '' ? null : Number(seed);
  form.allowedModes = (['Highway', 'Rail', 'Water'] as TransportMode[]).filter(
    (mode) => el<HTMLInputElement>(`mode-${mode.toLowerCase()}`).checked,
  );
}

function statusBadge(status: string): string {
  return `<span class="status status-${status}">${status}</span>`;
}

function renderRunList(): void {
  const tbody = el('run-rows');
  tbody.innerHTML = '';
  for (const record of [...runs.values()].reverse()) {
    const row = document.createElement('tr');
    const plan = planOf(record);
    row.innerHTML = `
      <td><input type="checkbox" data-run="${record.run_id}" ${selected.has(record.run_id) ? 'checked' : ''}></td>
      <td><a href="#" data-open="${record.run_id}">${record.run_id}</a></td>
      <td>${statusBadge(record.status)}</td>
      <td>${plan ? formatUsd(plan.total_usd) : '—'}</td>
      <td>${plan ? plan.total_time_hours.toFixed(2) + ' h' : '—'}</td>`;
    tbody.appendChild(row);
  }
  el<HTMLButtonElement>('compare').disabled = selected.size < 2;
}

function renderDetail(record: RunRecord): void {
  el('detail-title').textContent = `Run ${record.run_id}`;
  el('explanation').textContent = record.explanation ?? (record.error ? JSON.stringify(record.error, null, 2) : 'pending…');
  const plan = planOf(record);
  const report = reportOf(record);
  const costs = el('costs');
  if (plan && report) {
    costs.innerHTML = `
      <tr><th>Operational expenses</th><td>${formatUsd(plan.linehaul_usd)}</td></tr>
      <tr><th>Transfer and handling</th><td>${formatUsd(plan.transfer_usd)}</td></tr>
      <tr><th>GHG tax</th><td>${formatUsd(plan.ghg_tax_usd)}</td></tr>
      <tr><th>Total</th><td>${formatUsd(plan.total_usd)}</td></tr>
      <tr><th>Emissions</th><td>${plan.emissions_kg.toFixed(1)} kg CO2</td></tr>
      <tr><th>Transit time</th><td>${plan.total_time_hours.toFixed(2)} h</td></tr>
      <tr><th>On-time probability</th><td>${(report.on_time_probability * 100).toFixed(2)}%</td></tr>`;
  } else {
    costs.innerHTML = '';
  }
  el('map').innerHTML = record.geojson ? toSvg(projectOverlay(record.geojson)) : '';
  // reload the exact submitted request into the form
  form = formFromRequest(record.request);
  renderForm();
}

function renderComparison(): void {
  const records = [...selected].map((id) => runs.get(id)).filter((r): r is RunRecord => !!r);
  const { rows, omitted } = buildComparison(records);
  const table = el('compare-rows');
  table.innerHTML = '';
  for (const row of rows) {
    const tr = document.createElement('tr');
    tr.innerHTML = `
      <td>${row.runId}</td>
      <td>${row.carbonPrice.toFixed(2)}</td>
      <td>${formatUsd(row.totalUsd)}</td>
      <td>${formatUsd(row.ghgTaxUsd)}</td>
      <td>${row.emissionsKg.toFixed(1)}</td>
      <td>${row.totalTimeHours.toFixed(2)}</td>
      <td>${(row.onTimeProbability * 100).toFixed(2)}%</td>
      <td>${formatDelta(row.deltaTotalUsd, 'USD')} / ${formatDelta(row.deltaGhgTaxUsd, 'USD tax')}</td>`;
    table.appendChild(tr);
  }
  el('compare-note').textContent = omitted.length
    ? `omitted (not completed): ${omitted.join(', ')}`
    : '';
}

async function track(runId: string): Promise<void> {
  const record = await client.getRun(runId);
  runs.set(runId, record);
  renderRunList();
  if (record.status === 'pending' || record.status === 'running') {
    setTimeout(() => void track(runId), 1000);
  } else {
    renderDetail(record);
  }
}

async function submit(): Promise<void> {
  readForm();
  if (!canSubmit(form)) {
    renderForm();
    return;
  }
  try {
    const runId = await client.submitScenario(buildRequestBody(form));
    selected.add(runId);
    await track(runId);
  } catch (error) {
    el('form-errors').textContent =
      error instanceof GatewayError ? JSON.stringify(error.detail) : String(error);
  }
}

async function boot(): Promise<void> {
  fixtures = await client.getFixtures();
  if (!fixture()) form.fixture = fixtures[0]?.name ?? '';
  renderForm();
  el('scenario-form').addEventListener('input', () => {
    readForm();
    renderForm();
  });
  el<HTMLButtonElement>('submit').addEventListener('click', (event) => {
    event.preventDefault();
    void submit();
  });
  el<HTMLButtonElement>('compare').addEventListener('click', (event) => {
    event.preventDefault();
    renderComparison();
  });
  el('run-rows').addEventListener('click', (event) => {
    const target = event.target as HTMLElement;
    const open = target.getAttribute('data-open');
    if (open) {
      event.preventDefault();
      const record = runs.get(open);
      if (record) renderDetail(record);
    }
  });
  el('run-rows').addEventListener('change', (event) => {
    const target = event.target as HTMLInputElement;
    const runId = target.getAttribute('data-run');
    if (runId) {
      if (target.checked) selected.add(runId);
      else selected.delete(runId);
      el<HTMLButtonElement>('compare').disabled = selected.size < 2;
    }
  });
}

void boot();
