/** Wire types mirroring the gateway HTTP JSON API. */

export type TransportMode = 'Highway' | 'Rail' | 'Water';

export interface FixtureNode {
  id: number;
  name: string;
  kind: string;
  lat: number;
  lon: number;
}

export interface FixtureInfo {
  name: string;
  network_name: string;
  node_count: number;
  edge_count: number;
  modes: TransportMode[];
  nodes: FixtureNode[];
}

export interface ScenarioBody {
  origin: number;
  destination: number;
  containers: number;
  deadline_hours: number;
  carbon_price_usd_per_kg: number;
  allowed_modes: TransportMode[];
  travel_time_cv: number;
  seed?: number;
}

export interface ScenarioRequestBody {
  network_ref: string;
  scenario: ScenarioBody;
  options: { samples: number; k_pool: number; want_map: boolean };
}

export interface PlanLeg {
  edge_id: number;
  mode: TransportMode;
  depart_hours: number;
  arrive_hours: number;
}

export interface RoutePlanDoc {
  origin: number;
  destination: number;
  legs: PlanLeg[];
  transfers: Array<{
    node_id: number;
    from_mode: TransportMode;
    to_mode: TransportMode;
    start_hours: number;
    end_hours: number;
  }>;
  linehaul_usd: number;
  transfer_usd: number;
  ghg_tax_usd: number;
  total_usd: number;
  total_time_hours: number;
  emissions_kg: number;
  optimal: boolean;
}

export interface SimulationReportDoc {
  samples: number;
  on_time_probability: number;
  completion_p50_hours: number;
  completion_p95_hours: number;
  mean_completion_hours: number;
  per_leg_mean_hours: number[];
  seed_used: number;
}

export interface ToolResultDoc {
  id: number | string;
  ok: boolean;
  value?: unknown;
  error?: { code: number; message: string; data?: Record<string, unknown> };
}

export interface StepResultDoc {
  step_id: string;
  wall_ms: number;
  result: ToolResultDoc;
}

export interface WorkflowResultDoc {
  plan_id: string;
  status: 'completed' | 'failed';
  failed_at_step: string | null;
  step_results: StepResultDoc[];
  final_value: unknown;
}

export type GeoJsonPosition = [number, number];

export interface GeoJsonFeature {
  type: 'Feature';
  geometry:
    | { type: 'LineString'; coordinates: GeoJsonPosition[] }
    | { type: 'Point'; coordinates: GeoJsonPosition };
  properties: Record<string, unknown>;
}

export interface GeoJsonCollection {
  type: 'FeatureCollection';
  features: GeoJsonFeature[];
}

export type RunStatus = 'pending' | 'running' | 'completed' | 'failed';

export interface RunRecord {
  run_id: string;
  status: RunStatus;
  request: { network_ref?: string; scenario: ScenarioBody; options: ScenarioRequestBody['options'] };
  plan_id: string | null;
  result: WorkflowResultDoc | null;
  explanation: string | null;
  geojson: GeoJsonCollection | null;
  error: { message?: string; data?: Record<string, unknown> } | null;
}

/** The solver's plan from a completed run, if present. */
export function planOf(record: RunRecord): RoutePlanDoc | null {
  const step = record.result?.step_results.find((s) => s.step_id === 'solve_route');
  return step && step.result.ok ? (step.result.value as RoutePlanDoc) : null;
}

/** The simulation report from a completed run, if present. */
export function reportOf(record: RunRecord): SimulationReportDoc | null {
  const step = record.result?.step_results.find((s) => s.step_id === 'simulate_plan');
  return step && step.result.ok ? (step.result.value as SimulationReportDoc) : null;
}
